"""
Parsing surface forms into descriptors
======================================

"""

# classify_surface answers two questions at once: which category does a
# string belong to, and what does it say.  Descriptors are frozen values
# with a canonical rendering, so equivalent spellings collapse.
from varlex import canonical_string, classify_surface

spellings = [
    "p.Gln659Leu",        # three-letter protein substitution
    "Q659L",              # the same thing, one-letter
    "glutamine to leucine at codon 659 does not parse",  # see below
    "c.1799T>A",          # coding DNA substitution
    "1799 T>A",           # loose spacing, same event
    "Arg213fs",           # frameshift
    "two amino acid deletion",            # natural language, sized
    "nine base pair duplication",
    "1952_1960del",       # compact range form
    "rs113488022",        # dbSNP identifier
    "5q33",               # chromosome band
    "Chr10: 46123781-51028772",           # base-pair region
]

for surface in spellings:
    try:
        mtype, parsed = classify_surface(surface)
    except Exception as exc:
        print(f"{surface!r}: no parse ({exc})")
        continue
    if isinstance(parsed, str):
        print(f"{surface!r}: {mtype.label}, identifier {parsed}")
    elif hasattr(parsed, "chromosome"):
        print(f"{surface!r}: {mtype.label}")
    else:
        print(f"{surface!r}: {mtype.label}, canonical {canonical_string(parsed)}")

# Note the two protein spellings above print the same canonical p.Q659L.
# Whole sentences are not surface forms; embedded phrases are found by the
# recognizer instead (demo 01).

# Descriptors expose their parts directly.
_, d = classify_surface("c.1799T>A")
print(f"\nlevel={d.level.value} position={d.position} "
      f"ref={d.ref_allele} alt={d.alt_allele} edit={d.edit_kind.value}")

# Incomplete forms, such as an allele with no replacement residue, parse
# too; the missing half is simply None.
_, partial = classify_surface("V600")
print(f"V600 alt allele: {partial.alt_allele} "
      f"(incomplete: {partial.is_incomplete})")
