"""Count Gorenstein, smooth, factorial and Fano Schubert varieties in S_n."""

from gorenstein import census
from gorenstein.enumeration import format_row

if __name__ == "__main__":
    for n in range(1, 7):
        print(format_row(census(n, full=True, oracle=True), fmt="csv", header=(n == 1)))

    # blocks keyed by the first entry can be counted in parallel
    print(format_row(census(8, workers=4), fmt="text"))
