"""
Finding variant mentions in running text
========================================

"""

# The recognizer scans raw text and returns every variant mention with
# byte offsets, a category label, and a parsed form.  A gene lexicon is
# optional; with one, gene symbols are located too and fused tokens such
# as BRAFV600E are split into their gene and variant halves.
from varlex import Recognizer

recognizer = Recognizer(lexicon=frozenset({"BRAF", "KRAS", "EGFR"}))

text = (
    "Tumours carrying BRAFV600E or the KRAS change c.35G>A were frequent. "
    "We also saw rs113488022, a deletion of chr7:156583796-156584569, a "
    "306 base pair insertion, and loss at 10q11.12. Transcript "
    "NM_203475.1 was used throughout."
)

mentions, genes = recognizer.scan_document(text)

# Every mention knows where it sits (UTF-8 byte offsets), what category
# it belongs to, and either a parsed descriptor or a bare identifier.
for m in mentions:
    print(f"{m.start:>4}..{m.end:<4} {m.mtype.label:<18} {m.text}")

print()
for g in genes:
    print(f"{g.start:>4}..{g.end:<4} {'Gene':<18} {g.symbol}")

# The fused token keeps its provenance: the variant half remembers which
# gene prefix it was glued to.
fused = next(m for m in mentions if m.text == "V600E")
print(f"\nV600E carries gene hint: {fused.gene_hint}")

# Component sub-spans mark the wild-type residue, the mutant residue, and
# the sequence position inside a mention.
dna = next(m for m in mentions if m.text == "c.35G>A")
for role, (start, end) in sorted(dna.components.items(), key=lambda kv: kv[1]):
    print(f"c.35G>A component {role.name:<9} bytes {start}..{end}")
