"""Check the small-proportion structure theorem over the bundled corpus and
print the histogram of proportions."""

import sys

from vanishlab.corpus import bundled_corpus_dir, run_corpus

mode = sys.argv[1] if len(sys.argv) > 1 else "theorem-a"
m = run_corpus(bundled_corpus_dir(), mode)
print(mode, m.counters, "exit", m.exit_code)
for value, count in m.histogram.items():
    print(f"  {value:>10s}  {count}")
