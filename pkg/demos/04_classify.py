"""Full classification report with certificates."""

from gorenstein import canonical_weight, classify

for text in ("37148265", "134625", "125693478", "31524", "2143"):
    report = classify(text)
    print(report.to_text())
    if report.gorenstein:
        print("canonical weight:", canonical_weight(text))
    print()
