"""Values that exhaustive checking does not reproduce from the published text."""

from fgc.extremal import fig6_value
from fgc.verify import errata_report

for d in errata_report():
    print(d.line())
print(fig6_value().describe())
