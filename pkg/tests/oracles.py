"""Independent reference implementations used to check the package.

Everything here is written the slow, obvious way on purpose: raw row scans
instead of indexes, breadth-first closure instead of union-find, and a
descriptor generator that enumerates grammar-coverable shapes.  Agreement
between these and the real implementations is what the tests assert.
"""

from __future__ import annotations

import random
import re

from varlex import (
    EditKind,
    RegionDescriptor,
    RegionKind,
    SequenceLevel,
    VariantDescriptor,
    canonical_string,
)

DNA = "ACGT"
AA = "ACDEFGHIKLMNPQRSTVWY"


# ---------------------------------------------------------------------------
# Knowledge base: raw scan
# ---------------------------------------------------------------------------

def read_raw_rows(path: str) -> list[dict]:
    """Minimal TSV reader, no validation, used only as a reference."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    rows = []
    for line in lines[1:]:
        if not line.strip():
            continue
        c = [x.strip() for x in line.split("\t")]
        rows.append({
            "rsid": c[0], "ca": c[1], "gene": c[2],
            "dna": c[3], "prot": c[4], "ref": c[5], "alt": c[6],
        })
    return rows


_PREFIX_RX = re.compile(r"p\.[A-Z]\d+")


def brute_force_lookup(
    rows: list[dict], gene: str | None, descriptor: VariantDescriptor
) -> list[tuple]:
    """Scan every row; return matches as (rsid, ca, gene) tuples in the
    same deterministic order the indexed lookup promises."""
    canon = canonical_string(descriptor)
    protein = descriptor.level is SequenceLevel.PROTEIN
    incomplete = (
        descriptor.edit_kind is EditKind.SUBSTITUTION
        and descriptor.alt_allele is None
    )
    hits = []
    for row in rows:
        if gene and row["gene"] != gene:
            continue
        if protein and incomplete:
            m = _PREFIX_RX.match(row["prot"])
            ok = m is not None and m.group(0) == canon
        elif protein:
            ok = row["prot"] == canon
        else:
            ok = row["dna"] == canon
        if ok:
            hits.append(row)

    def order(row):
        if row["rsid"]:
            return (0, int(row["rsid"][2:]), row["ca"])
        return (1, 0, row["ca"])

    deduped = []
    for row in sorted(hits, key=order):
        item = (row["rsid"], row["ca"], row["gene"])
        if item not in deduped:
            deduped.append(item)
    return deduped


# ---------------------------------------------------------------------------
# Grouping: breadth-first transitive closure
# ---------------------------------------------------------------------------

def closure_partition(n: int, linked) -> list[tuple[int, ...]]:
    """Partition 0..n-1 into components of the symmetric relation
    ``linked(i, j)``, each sorted, ordered by first member."""
    unassigned = set(range(n))
    components = []
    while unassigned:
        seed = min(unassigned)
        component = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in range(n):
                if j not in component and (linked(i, j) or linked(j, i)):
                    component.add(j)
                    frontier.append(j)
        unassigned -= component
        components.append(tuple(sorted(component)))
    components.sort(key=lambda c: c[0])
    return components


def prefix_compatible(a: VariantDescriptor, b: VariantDescriptor) -> bool:
    """Re-derived compatibility check for incomplete/complete mention pairs."""
    if not (isinstance(a, VariantDescriptor) and isinstance(b, VariantDescriptor)):
        return False
    same_shape = (
        a.edit_kind is EditKind.SUBSTITUTION
        and b.edit_kind is EditKind.SUBSTITUTION
        and a.level is b.level
        and a.position is not None
        and a.position == b.position
        and a.ref_allele is not None
        and a.ref_allele == b.ref_allele
    )
    if not same_shape:
        return False
    return (a.alt_allele is None) != (b.alt_allele is None)


# ---------------------------------------------------------------------------
# Descriptor generator
# ---------------------------------------------------------------------------

def _dna_seq(rng: random.Random, lo=1, hi=4) -> str:
    return "".join(rng.choice(DNA) for _ in range(rng.randint(lo, hi)))


def _aa_seq(rng: random.Random, lo=1, hi=3) -> str:
    return "".join(rng.choice(AA) for _ in range(rng.randint(lo, hi)))


def _dna_level(rng: random.Random) -> SequenceLevel:
    return rng.choice([
        SequenceLevel.DNA_CODING,
        SequenceLevel.DNA_GENOMIC,
        SequenceLevel.RNA,
        SequenceLevel.MITO,
        SequenceLevel.UNSPECIFIED,
    ])


def random_descriptor(rng: random.Random):
    """One random descriptor whose canonical form the grammar can re-read.

    Shapes no surface grammar produces (a positionless deletion that still
    carries its deleted sequence, say) are deliberately never generated.
    """
    pos = rng.randint(1, 500000)
    shape = rng.randrange(16)
    if shape == 0:
        return VariantDescriptor(
            level=_dna_level(rng), position=pos,
            ref_allele=rng.choice([None, rng.choice(DNA)]),
            alt_allele=rng.choice(DNA), edit_kind=EditKind.SUBSTITUTION,
        )
    if shape == 1:
        return VariantDescriptor(
            level=_dna_level(rng), position=pos,
            ref_allele=rng.choice(DNA), edit_kind=EditKind.SUBSTITUTION,
        )
    if shape == 2:
        return VariantDescriptor(
            level=_dna_level(rng),
            ref_allele=rng.choice(DNA), alt_allele=rng.choice(DNA),
            edit_kind=EditKind.SUBSTITUTION,
        )
    if shape == 3:
        seq = _dna_seq(rng)
        return VariantDescriptor(
            level=_dna_level(rng), position=pos,
            ref_allele=seq,
            edit_kind=rng.choice([EditKind.DELETION, EditKind.DUPLICATION]),
        )
    if shape == 4:
        # Sequenced insertion; a bare sized insertion at DNA level has no
        # surface form to round-trip through.
        return VariantDescriptor(
            level=_dna_level(rng), position=pos,
            position_end=rng.choice([None, pos + 1]),
            alt_allele=_dna_seq(rng), edit_kind=EditKind.INSERTION,
        )
    if shape == 5:
        return VariantDescriptor(
            level=SequenceLevel.PROTEIN, position=pos,
            ref_allele=rng.choice(AA),
            alt_allele=rng.choice(AA + "*"),
            edit_kind=EditKind.SUBSTITUTION,
        )
    if shape == 6:
        return VariantDescriptor(
            level=SequenceLevel.PROTEIN, position=pos,
            ref_allele=rng.choice(AA), edit_kind=EditKind.SUBSTITUTION,
        )
    if shape == 7:
        return VariantDescriptor(
            level=SequenceLevel.PROTEIN,
            ref_allele=rng.choice(AA), alt_allele=rng.choice(AA),
            edit_kind=EditKind.SUBSTITUTION,
        )
    if shape == 8:
        return VariantDescriptor(
            level=SequenceLevel.PROTEIN, position=pos,
            ref_allele=rng.choice(AA), edit_kind=EditKind.FRAMESHIFT,
        )
    if shape == 9:
        return VariantDescriptor(
            level=SequenceLevel.PROTEIN, position=pos,
            ref_allele=rng.choice(AA),
            edit_kind=rng.choice([EditKind.DELETION, EditKind.DUPLICATION]),
        )
    if shape == 10:
        return VariantDescriptor(
            level=SequenceLevel.PROTEIN, position=pos,
            position_end=rng.choice([None, pos + 1]),
            alt_allele=_aa_seq(rng), edit_kind=EditKind.INSERTION,
        )
    if shape == 11:
        size = rng.randint(1, 9999)
        return VariantDescriptor(
            position=rng.choice([None, pos]),
            edit_kind=rng.choice(
                [EditKind.DELETION, EditKind.INSERTION, EditKind.DUPLICATION]
            ),
            size=size,
        )
    if shape == 12:
        return VariantDescriptor(
            position=pos, position_end=pos + rng.randint(0, 50),
            edit_kind=rng.choice([EditKind.DELETION, EditKind.DUPLICATION]),
        )
    chrom = rng.choice([str(rng.randint(1, 22)), "X", "Y"])
    if shape == 13:
        band = str(rng.randint(1, 39))
        if rng.random() < 0.5:
            band += f".{rng.randint(1, 13)}"
        return RegionDescriptor(
            chromosome=chrom, kind=RegionKind.CHROMOSOME_BAND,
            arm_band=rng.choice("pq") + band,
        )
    start = rng.randint(0, 200_000_000)
    end = start + rng.randint(0, 60_000_000)
    if shape == 14:
        return RegionDescriptor(
            chromosome=chrom, kind=RegionKind.BP_REGION,
            start_bp=start, end_bp=end,
        )
    return RegionDescriptor(
        chromosome=chrom,
        kind=rng.choice([RegionKind.CNV_DEL, RegionKind.CNV_DUP]),
        start_bp=start, end_bp=end,
    )
