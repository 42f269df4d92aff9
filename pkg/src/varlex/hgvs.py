"""Variant descriptors and the surface grammars that produce them.

A descriptor is the structured reading of one variant mention: sequence
level, position, wild-type and mutant alleles, and edit kind.  Region
descriptors cover cytogenetic bands, base-pair ranges, and copy number
events.  The grammars here are shared by :func:`parse_descriptor`, which
full-matches a known surface form, and by the recognizer, which scans the
same patterns across running text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Union

from .errors import NoSeparator, ParseFailure, UnknownResidue


class MentionType(Enum):
    """The twelve variant concept types.  Values double as file labels."""

    SNP = "SNP"
    DNA_MUTATION = "DNAMutation"
    DNA_ALLELE = "DNAAllele"
    DNA_CHANGE = "DNAChange"
    PROTEIN_MUTATION = "ProteinMutation"
    PROTEIN_ALLELE = "ProteinAllele"
    PROTEIN_CHANGE = "ProteinChange"
    OTHER_MUTATION = "OtherMutation"
    CNV = "CopyNumberVariant"
    REFSEQ = "RefSeq"
    CHROMOSOME = "Chromosome"
    GENOMIC_REGION = "GenomicRegion"

    @property
    def label(self) -> str:
        return self.value

    @classmethod
    def from_label(cls, label: str) -> "MentionType":
        return cls(label)


# Overlap arbitration order: more specific concept types win when spans tie.
TYPE_PRIORITY = (
    MentionType.SNP,
    MentionType.DNA_MUTATION,
    MentionType.PROTEIN_MUTATION,
    MentionType.CNV,
    MentionType.GENOMIC_REGION,
    MentionType.REFSEQ,
    MentionType.CHROMOSOME,
    MentionType.DNA_ALLELE,
    MentionType.PROTEIN_ALLELE,
    MentionType.DNA_CHANGE,
    MentionType.PROTEIN_CHANGE,
    MentionType.OTHER_MUTATION,
)

IDENTIFIER_TYPES = frozenset({MentionType.SNP, MentionType.REFSEQ})


class SequenceLevel(Enum):
    DNA_CODING = "c"
    DNA_GENOMIC = "g"
    PROTEIN = "p"
    RNA = "r"
    MITO = "m"
    UNSPECIFIED = ""


class EditKind(Enum):
    SUBSTITUTION = "SUBSTITUTION"
    DELETION = "DELETION"
    INSERTION = "INSERTION"
    DUPLICATION = "DUPLICATION"
    FRAMESHIFT = "FRAMESHIFT"
    UNSPECIFIED = "UNSPECIFIED"


class RegionKind(Enum):
    CHROMOSOME_BAND = "CHROMOSOME_BAND"
    BP_REGION = "BP_REGION"
    CNV_DEL = "CNV_DEL"
    CNV_DUP = "CNV_DUP"


class ComponentRole(Enum):
    WILDTYPE = "WILDTYPE"
    MUTANT = "MUTANT"
    POSITION = "POSITION"


# ---------------------------------------------------------------------------
# Residue tables
# ---------------------------------------------------------------------------

AA3_TO_1 = {
    "Ala": "A", "Arg": "R", "Asn": "N", "Asp": "D", "Cys": "C",
    "Gln": "Q", "Glu": "E", "Gly": "G", "His": "H", "Ile": "I",
    "Leu": "L", "Lys": "K", "Met": "M", "Phe": "F", "Pro": "P",
    "Ser": "S", "Thr": "T", "Trp": "W", "Tyr": "Y", "Val": "V",
    "Sec": "U", "Ter": "*",
}

AA_NAME_TO_1 = {
    "alanine": "A", "arginine": "R", "asparagine": "N",
    "aspartate": "D", "aspartic acid": "D", "cysteine": "C",
    "glutamine": "Q", "glutamate": "E", "glutamic acid": "E",
    "glycine": "G", "histidine": "H", "isoleucine": "I",
    "leucine": "L", "lysine": "K", "methionine": "M",
    "phenylalanine": "F", "proline": "P", "serine": "S",
    "threonine": "T", "tryptophan": "W", "tyrosine": "Y",
    "valine": "V", "selenocysteine": "U", "stop": "*",
}

NUC_NAME_TO_1 = {
    "adenine": "A", "guanine": "G", "cytosine": "C",
    "thymine": "T", "uracil": "U",
}

_AA_ONE = frozenset("ACDEFGHIKLMNPQRSTVWY")

NUMBER_WORDS = {
    "one": 1, "two": 2, "three": 3, "four": 4, "five": 5,
    "six": 6, "seven": 7, "eight": 8, "nine": 9, "ten": 10,
    "eleven": 11, "twelve": 12, "thirteen": 13, "fourteen": 14,
    "fifteen": 15, "sixteen": 16, "seventeen": 17, "eighteen": 18,
    "nineteen": 19, "twenty": 20,
}


def normalize_amino_acid(name: str) -> str:
    """Collapse a residue spelling to its one-letter code.

    Accepts one-letter codes, three-letter codes, and full names in any
    case.  Ter/Stop/X map to "*", selenocysteine to "U".
    """
    s = name.strip()
    if not s:
        raise UnknownResidue(name)
    if len(s) == 1:
        u = s.upper()
        if u in _AA_ONE or u == "U":
            return u
        if u in ("X", "*"):
            return "*"
        raise UnknownResidue(name)
    if len(s) == 3:
        code = AA3_TO_1.get(s.capitalize())
        if code:
            return code
    low = s.lower()
    if low in AA_NAME_TO_1:
        return AA_NAME_TO_1[low]
    if low in ("ter", "stop"):
        return "*"
    raise UnknownResidue(name)


_ARROW = re.compile(r"-->|->|→|>|/|\s+to\s+", re.IGNORECASE)


def normalize_arrow(text: str) -> str:
    """Rewrite a wild-type/mutant pair to canonical ``X>Y`` form.

    Understands the separators ``>``, ``->``, ``-->``, ``→``, ``/`` and the
    word ``to``; each side may be a nucleotide letter or name, or an amino
    acid in any spelling ("methionine to threonine" -> "M>T").
    """
    m = _ARROW.search(text)
    if m is None:
        raise NoSeparator(text)
    left, right = text[: m.start()], text[m.end():]
    return f"{_normalize_allele_name(left)}>{_normalize_allele_name(right)}"


def _normalize_allele_name(side: str) -> str:
    s = side.strip()
    low = s.lower()
    if low in NUC_NAME_TO_1:
        return NUC_NAME_TO_1[low]
    if len(s) == 1 and s.upper() in "ACGTU":
        return s.upper()
    return normalize_amino_acid(s)


# ---------------------------------------------------------------------------
# Descriptors
# ---------------------------------------------------------------------------

_DNA_ALPHABET = frozenset("ACGTU")
_PROTEIN_ALPHABET = _AA_ONE | {"U", "*"}

_LEVEL_PREFIX = {
    SequenceLevel.DNA_CODING: "c.",
    SequenceLevel.DNA_GENOMIC: "g.",
    SequenceLevel.PROTEIN: "p.",
    SequenceLevel.RNA: "r.",
    SequenceLevel.MITO: "m.",
    SequenceLevel.UNSPECIFIED: "",
}

_LEVEL_BY_LETTER = {
    "c": SequenceLevel.DNA_CODING,
    "g": SequenceLevel.DNA_GENOMIC,
    "p": SequenceLevel.PROTEIN,
    "r": SequenceLevel.RNA,
    "m": SequenceLevel.MITO,
}


@dataclass(frozen=True)
class VariantDescriptor:
    """Structured reading of a sequence-variant mention.

    ``size`` counts edited units for length-described events ("nine
    nucleotide deletion"); when both a position and a size are known for a
    deletion or duplication the end position is derived from them.  ``raw``
    keeps the verbatim surface and never takes part in equality.
    """

    level: SequenceLevel = SequenceLevel.UNSPECIFIED
    position: int | None = None
    position_end: int | None = None
    ref_allele: str | None = None
    alt_allele: str | None = None
    edit_kind: EditKind = EditKind.UNSPECIFIED
    size: int | None = None
    raw: str = field(default="", compare=False)

    def __post_init__(self):
        if self.position is not None and self.position < 1:
            raise ValueError(f"position must be >= 1, got {self.position}")
        if self.position_end is not None:
            if self.position is None:
                raise ValueError("position_end without position")
            if self.position_end < self.position:
                raise ValueError("position_end before position")
        if self.size is not None and self.size < 1:
            raise ValueError(f"size must be >= 1, got {self.size}")
        alphabet = (
            _PROTEIN_ALPHABET
            if self.level is SequenceLevel.PROTEIN
            else _DNA_ALPHABET
        )
        for allele in (self.ref_allele, self.alt_allele):
            if allele is not None:
                if not allele or not set(allele) <= alphabet:
                    raise ValueError(f"bad allele string {allele!r}")
        kind = self.edit_kind
        if kind is EditKind.SUBSTITUTION:
            if self.ref_allele is None and self.alt_allele is None:
                raise ValueError("substitution needs at least one allele")
            if self.level is SequenceLevel.PROTEIN and self.ref_allele is None:
                raise ValueError("protein substitution needs a wild-type allele")
            if self.position is None and (
                self.ref_allele is None or self.alt_allele is None
            ):
                raise ValueError("positionless substitution needs both alleles")
        elif kind is EditKind.FRAMESHIFT:
            if self.level is not SequenceLevel.PROTEIN:
                raise ValueError("frameshift is a protein-level edit")
            if self.position is None or self.ref_allele is None:
                raise ValueError("frameshift needs a position and wild-type")
        elif kind in (EditKind.DELETION, EditKind.DUPLICATION):
            seq = self.ref_allele
            if self.size is None:
                if self.position is not None and self.position_end is not None:
                    object.__setattr__(
                        self, "size", self.position_end - self.position + 1
                    )
                elif seq is not None:
                    object.__setattr__(self, "size", len(seq))
                elif self.position is not None:
                    object.__setattr__(self, "size", 1)
            if (
                self.size is not None
                and self.position is not None
                and self.position_end is None
            ):
                object.__setattr__(
                    self, "position_end", self.position + self.size - 1
                )
            if self.position is not None and self.position_end is not None:
                span = self.position_end - self.position + 1
                if self.size is not None and self.size != span:
                    raise ValueError(
                        f"size {self.size} disagrees with span {span}"
                    )
            if seq is not None and self.size is not None and len(seq) != self.size:
                raise ValueError("size disagrees with deleted sequence length")
        elif kind is EditKind.INSERTION:
            # Insertion ranges name the flanking positions, so the span is
            # unrelated to the inserted length; only the sequence fixes size.
            if self.size is None and self.alt_allele is not None:
                object.__setattr__(self, "size", len(self.alt_allele))
            if (
                self.alt_allele is not None
                and self.size is not None
                and len(self.alt_allele) != self.size
            ):
                raise ValueError("size disagrees with inserted sequence length")

    @property
    def is_incomplete(self) -> bool:
        """True for allele-style mentions that name no mutant ("V600")."""
        return (
            self.edit_kind is EditKind.SUBSTITUTION and self.alt_allele is None
        )


@dataclass(frozen=True)
class RegionDescriptor:
    """A chromosomal location: band, base-pair range, or copy number event."""

    chromosome: str
    kind: RegionKind
    arm_band: str | None = None
    start_bp: int | None = None
    end_bp: int | None = None
    raw: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.chromosome:
            raise ValueError("empty chromosome label")
        if self.kind is RegionKind.CHROMOSOME_BAND:
            if not self.arm_band:
                raise ValueError("band region needs an arm/band label")
        else:
            if self.start_bp is None or self.end_bp is None:
                raise ValueError(f"{self.kind.value} needs both coordinates")
            if self.start_bp < 0 or self.end_bp < self.start_bp:
                raise ValueError("coordinates out of order")


Descriptor = Union[VariantDescriptor, RegionDescriptor]


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

_EDIT_WORD = {
    EditKind.DELETION: "del",
    EditKind.INSERTION: "ins",
    EditKind.DUPLICATION: "dup",
}


def canonical_string(d: VariantDescriptor) -> str:
    """Deterministic canonical rendering, e.g. ``c.1799T>A`` or ``p.V600E``.

    Incomplete variants keep their partial form ("p.P799"); protein
    substitutions render in one-letter code without a separator.
    """
    prefix = _LEVEL_PREFIX[d.level]
    protein = d.level is SequenceLevel.PROTEIN
    if d.edit_kind is EditKind.SUBSTITUTION:
        if d.position is None:
            return f"{prefix}{d.ref_allele}>{d.alt_allele}"
        if protein:
            alt = d.alt_allele or ""
            return f"{prefix}{d.ref_allele}{d.position}{alt}"
        if d.alt_allele is None:
            return f"{prefix}{d.position}{d.ref_allele}"
        return f"{prefix}{d.position}{d.ref_allele or ''}>{d.alt_allele}"
    if d.edit_kind is EditKind.FRAMESHIFT:
        return f"{prefix}{d.ref_allele}{d.position}fs"
    if d.edit_kind in _EDIT_WORD:
        word = _EDIT_WORD[d.edit_kind]
        ins = d.edit_kind is EditKind.INSERTION
        seq = d.alt_allele if ins else d.ref_allele
        if (
            protein
            and not ins
            and seq is not None
            and len(seq) == 1
            and d.position is not None
            and d.position_end in (None, d.position)
        ):
            return f"{prefix}{seq}{d.position}{word}"
        if d.position is None:
            return f"{word}{d.size}"
        out = f"{prefix}{d.position}"
        if d.position_end is not None and d.position_end != d.position:
            out += f"_{d.position_end}"
        out += word
        if seq:
            out += seq
        elif ins and d.size is not None:
            out += str(d.size)
        return out
    # Unspecified edit: fall back to the incomplete substitution shape.
    if protein:
        return f"{prefix}{d.ref_allele or ''}{d.position or ''}"
    return f"{prefix}{d.position or ''}{d.ref_allele or ''}"


def region_string(r: RegionDescriptor) -> str:
    """Compact rendering of a region descriptor."""
    if r.kind is RegionKind.CHROMOSOME_BAND:
        return f"{r.chromosome}{r.arm_band}"
    out = f"chr{r.chromosome}:{r.start_bp}-{r.end_bp}"
    if r.kind is RegionKind.CNV_DEL:
        out += "del"
    elif r.kind is RegionKind.CNV_DUP:
        out += "dup"
    return out


def classify_descriptor(d: Descriptor) -> MentionType:
    """The mention type whose grammar owns this descriptor's canonical form."""
    if isinstance(d, RegionDescriptor):
        if d.kind is RegionKind.CHROMOSOME_BAND:
            return MentionType.CHROMOSOME
        if d.kind is RegionKind.BP_REGION:
            return MentionType.GENOMIC_REGION
        return MentionType.CNV
    if d.level is SequenceLevel.PROTEIN:
        if d.edit_kind is EditKind.SUBSTITUTION:
            if d.position is None:
                return MentionType.PROTEIN_CHANGE
            if d.alt_allele is None:
                return MentionType.PROTEIN_ALLELE
            return MentionType.PROTEIN_MUTATION
        return MentionType.PROTEIN_MUTATION
    if d.edit_kind is EditKind.SUBSTITUTION:
        if d.position is None:
            return MentionType.DNA_CHANGE
        if d.alt_allele is None:
            return MentionType.DNA_ALLELE
        return MentionType.DNA_MUTATION
    if d.level is not SequenceLevel.UNSPECIFIED:
        return MentionType.DNA_MUTATION
    if d.ref_allele is not None or d.alt_allele is not None:
        return MentionType.DNA_MUTATION
    return MentionType.OTHER_MUTATION


# ---------------------------------------------------------------------------
# Grammar rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrammarRule:
    """One surface pattern plus the builder that structures its match.

    ``pattern`` is used for full-string parsing; ``scan_pattern`` (defaulting
    to the same string) is what the recognizer embeds in running text.  Rules
    with ``scan=False`` exist only so canonical renderings re-parse.
    """

    mtype: MentionType
    pattern: str
    build: Callable[[re.Match], Descriptor | str]
    flags: int = 0
    scan: bool = True
    scan_pattern: str | None = None
    components: tuple[tuple[ComponentRole, str], ...] = ()
    rx: re.Pattern = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rx", re.compile(self.pattern, self.flags))


_POS = r"[1-9]\d*"
_NUC = r"[ACGTU]"
_AA1 = r"[ACDEFGHIKLMNPQRSTVWY]"
_AA1_MUT = r"[ACDEFGHIKLMNPQRSTVWYUX*]"
_AA3 = (
    r"(?:Ala|Arg|Asn|Asp|Cys|Gln|Glu|Gly|His|Ile|Leu|Lys|Met|Phe|Pro|Ser"
    r"|Thr|Trp|Tyr|Val|Sec)"
)
_AA3_MUT = (
    r"(?:Ala|Arg|Asn|Asp|Cys|Gln|Glu|Gly|His|Ile|Leu|Lys|Met|Phe|Pro|Ser"
    r"|Thr|Trp|Tyr|Val|Sec|Ter|X|\*)"
)
_AA_NAME = "(?:%s)" % "|".join(
    sorted(AA_NAME_TO_1, key=len, reverse=True)
)
_NUC_NAME = r"(?:adenine|guanine|cytosine|thymine|uracil)"
_NUM_WORD = "(?:%s)" % "|".join(
    sorted(NUMBER_WORDS, key=len, reverse=True)
)
_ARROW_SEP = r"\s?(?:-->|->|→|>)\s?"
_CHROM = r"(?:[1-9]\d?|[XY]|MT?)"
_COORD = r"\d(?:[\d,]*\d)?"
_CHR_WORD = r"[Cc]hr(?:omosome)?\.?\s*"
_UNIT = r"nucleotides?|base[ \-]?pairs?|bp|amino[ \-]?acids?|codons?"


def _level_of(m: re.Match) -> SequenceLevel:
    letter = m.groupdict().get("lv")
    return _LEVEL_BY_LETTER[letter] if letter else SequenceLevel.UNSPECIFIED


def _aa_of(m: re.Match, *names: str) -> str | None:
    gd = m.groupdict()
    for name in names:
        value = gd.get(name)
        if value:
            return normalize_amino_acid(value)
    return None


def _int_of(m: re.Match, name: str) -> int | None:
    value = m.groupdict().get(name)
    return int(value) if value else None


def _coord(m: re.Match, name: str) -> int:
    return int(m.group(name).replace(",", ""))


_EDIT_BY_WORD = {
    "del": EditKind.DELETION,
    "ins": EditKind.INSERTION,
    "dup": EditKind.DUPLICATION,
    "deletion": EditKind.DELETION,
    "insertion": EditKind.INSERTION,
    "duplication": EditKind.DUPLICATION,
}


def _build_dna_sub(m: re.Match) -> VariantDescriptor:
    return VariantDescriptor(
        level=_level_of(m),
        position=int(m.group("pos")),
        ref_allele=m.group("wt") or None,
        alt_allele=m.group("mt"),
        edit_kind=EditKind.SUBSTITUTION,
        raw=m.group(0),
    )


def _build_dna_edit(m: re.Match) -> VariantDescriptor:
    kind = _EDIT_BY_WORD[m.group("ed")]
    seq = m.group("seq") or None
    return VariantDescriptor(
        level=_level_of(m),
        position=int(m.group("pos")),
        position_end=_int_of(m, "pos2"),
        ref_allele=None if kind is EditKind.INSERTION else seq,
        alt_allele=seq if kind is EditKind.INSERTION else None,
        edit_kind=kind,
        raw=m.group(0),
    )


def _build_dna_allele(m: re.Match) -> VariantDescriptor:
    return VariantDescriptor(
        level=_level_of(m),
        position=int(m.group("pos")),
        ref_allele=m.group("wt"),
        edit_kind=EditKind.SUBSTITUTION,
        raw=m.group(0),
    )


def _build_dna_change(m: re.Match) -> VariantDescriptor:
    gd = m.groupdict()
    wt, mt = gd.get("wt"), gd.get("mt")
    if wt is None:
        wt = NUC_NAME_TO_1[gd["wtn"].lower()]
        mt = NUC_NAME_TO_1[gd["mtn"].lower()]
    return VariantDescriptor(
        level=_level_of(m),
        ref_allele=wt.upper(),
        alt_allele=mt.upper(),
        edit_kind=EditKind.SUBSTITUTION,
        raw=m.group(0),
    )


def _build_prot_sub(m: re.Match) -> VariantDescriptor:
    return VariantDescriptor(
        level=SequenceLevel.PROTEIN,
        position=int(m.group("pos")),
        ref_allele=_aa_of(m, "wt", "wt3"),
        alt_allele=_aa_of(m, "mt", "mt3"),
        edit_kind=EditKind.SUBSTITUTION,
        raw=m.group(0),
    )


def _build_prot_allele(m: re.Match) -> VariantDescriptor:
    return VariantDescriptor(
        level=SequenceLevel.PROTEIN,
        position=int(m.group("pos")),
        ref_allele=_aa_of(m, "wt", "wt3", "wtn"),
        edit_kind=EditKind.SUBSTITUTION,
        raw=m.group(0),
    )


def _build_prot_change(m: re.Match) -> VariantDescriptor:
    return VariantDescriptor(
        level=SequenceLevel.PROTEIN,
        ref_allele=_aa_of(m, "wt", "wt3", "wtn"),
        alt_allele=_aa_of(m, "mt", "mt3", "mtn"),
        edit_kind=EditKind.SUBSTITUTION,
        raw=m.group(0),
    )


def _build_prot_fs(m: re.Match) -> VariantDescriptor:
    return VariantDescriptor(
        level=SequenceLevel.PROTEIN,
        position=int(m.group("pos")),
        ref_allele=_aa_of(m, "wt", "wt3"),
        edit_kind=EditKind.FRAMESHIFT,
        raw=m.group(0),
    )


def _build_prot_edit(m: re.Match) -> VariantDescriptor:
    return VariantDescriptor(
        level=SequenceLevel.PROTEIN,
        position=int(m.group("pos")),
        ref_allele=_aa_of(m, "wt", "wt3"),
        edit_kind=_EDIT_BY_WORD[m.group("ed")],
        raw=m.group(0),
    )


def _build_prot_edit_pos(m: re.Match) -> VariantDescriptor:
    kind = _EDIT_BY_WORD[m.group("ed")]
    seq = m.group("seq") or None
    return VariantDescriptor(
        level=SequenceLevel.PROTEIN,
        position=int(m.group("pos")),
        position_end=_int_of(m, "pos2"),
        ref_allele=None if kind is EditKind.INSERTION else seq,
        alt_allele=seq if kind is EditKind.INSERTION else None,
        edit_kind=kind,
        size=_int_of(m, "size"),
        raw=m.group(0),
    )


def _build_other_nl(m: re.Match) -> VariantDescriptor:
    num = m.group("num").lower()
    size = int(num) if num.isdigit() else NUMBER_WORDS[num]
    return VariantDescriptor(
        position=_int_of(m, "pos"),
        edit_kind=_EDIT_BY_WORD[m.group("ed").lower()],
        size=size,
        raw=m.group(0),
    )


def _build_other_compact(m: re.Match) -> VariantDescriptor:
    return VariantDescriptor(
        position=_int_of(m, "pos"),
        position_end=_int_of(m, "pos2"),
        edit_kind=_EDIT_BY_WORD[m.group("ed")],
        size=_int_of(m, "size"),
        raw=m.group(0),
    )


def _build_band(m: re.Match) -> RegionDescriptor:
    return RegionDescriptor(
        chromosome=m.group("chrom").upper(),
        kind=RegionKind.CHROMOSOME_BAND,
        arm_band=f"{m.group('arm').lower()}{m.group('band')}",
        raw=m.group(0),
    )


def _coords_of(m: re.Match) -> tuple[int, int]:
    start, end = _coord(m, "c1"), _coord(m, "c2")
    if end < start:
        raise ParseFailure(m.group(0), m.start("c2") - m.start(), "end before start")
    return start, end


def _build_bp_region(m: re.Match) -> RegionDescriptor:
    start, end = _coords_of(m)
    return RegionDescriptor(
        chromosome=m.group("chrom").upper(),
        kind=RegionKind.BP_REGION,
        start_bp=start,
        end_bp=end,
        raw=m.group(0),
    )


def _build_cnv(m: re.Match) -> RegionDescriptor:
    start, end = _coords_of(m)
    kind = (
        RegionKind.CNV_DEL
        if m.group("ed").lower().startswith("del")
        else RegionKind.CNV_DUP
    )
    return RegionDescriptor(
        chromosome=m.group("chrom").upper(),
        kind=kind,
        start_bp=start,
        end_bp=end,
        raw=m.group(0),
    )


def _build_rsid(m: re.Match) -> str:
    return f"rs{m.group('digits')}"


def _build_refseq(m: re.Match) -> str:
    return m.group("acc")


_C = ComponentRole

GRAMMAR_RULES: tuple[GrammarRule, ...] = (
    # --- identifiers -------------------------------------------------------
    GrammarRule(
        MentionType.SNP,
        r"[Rr][Ss](?P<digits>[1-9]\d*)",
        _build_rsid,
    ),
    GrammarRule(
        MentionType.REFSEQ,
        r"(?P<acc>(?:NM|NP|NC|NG|NR|XM|XP)_\d+(?:\.\d+)?)",
        _build_refseq,
    ),
    # --- DNA ---------------------------------------------------------------
    GrammarRule(
        MentionType.DNA_MUTATION,
        r"(?:(?P<lv>[cgmr])\.)?(?P<pos>%s)\s?(?P<wt>%s?)%s(?P<mt>%s)"
        % (_POS, _NUC, _ARROW_SEP, _NUC),
        _build_dna_sub,
        components=((_C.POSITION, "pos"), (_C.WILDTYPE, "wt"), (_C.MUTANT, "mt")),
    ),
    GrammarRule(
        MentionType.DNA_MUTATION,
        r"(?:(?P<lv>[cgmr])\.)?(?P<pos>%s)(?P<wt>%s)/(?P<mt>%s)"
        % (_POS, _NUC, _NUC),
        _build_dna_sub,
        components=((_C.POSITION, "pos"), (_C.WILDTYPE, "wt"), (_C.MUTANT, "mt")),
    ),
    GrammarRule(
        MentionType.DNA_MUTATION,
        r"(?:(?P<lv>[cgmr])\.)?(?P<pos>%s)(?:_(?P<pos2>%s))?(?P<ed>del|ins|dup)(?P<seq>%s*)"
        % (_POS, _POS, _NUC),
        _build_dna_edit,
        scan_pattern=(
            r"(?P<lv>[cgmr])\.(?P<pos>%s)(?:_(?P<pos2>%s))?(?P<ed>del|ins|dup)(?P<seq>%s*)"
            % (_POS, _POS, _NUC)
        ),
        components=((_C.POSITION, "pos"),),
    ),
    GrammarRule(
        MentionType.DNA_ALLELE,
        r"(?:(?P<lv>[cgmr])\.)?(?P<pos>%s)(?P<wt>%s)" % (_POS, _NUC),
        _build_dna_allele,
        components=((_C.POSITION, "pos"), (_C.WILDTYPE, "wt")),
    ),
    GrammarRule(
        MentionType.DNA_CHANGE,
        r"(?:(?P<lv>[cgmr])\.)?(?P<wt>%s)%s(?P<mt>%s)" % (_NUC, _ARROW_SEP, _NUC),
        _build_dna_change,
        components=((_C.WILDTYPE, "wt"), (_C.MUTANT, "mt")),
    ),
    GrammarRule(
        MentionType.DNA_CHANGE,
        r"(?P<wt>%s)/(?P<mt>%s)" % (_NUC, _NUC),
        _build_dna_change,
        components=((_C.WILDTYPE, "wt"), (_C.MUTANT, "mt")),
    ),
    GrammarRule(
        MentionType.DNA_CHANGE,
        r"(?P<wtn>%s)\s+to\s+(?P<mtn>%s)" % (_NUC_NAME, _NUC_NAME),
        _build_dna_change,
        flags=re.IGNORECASE,
        components=((_C.WILDTYPE, "wtn"), (_C.MUTANT, "mtn")),
    ),
    # --- protein -----------------------------------------------------------
    GrammarRule(
        MentionType.PROTEIN_MUTATION,
        r"(?:p\.)?(?P<wt>%s)(?P<pos>%s)(?P<mt>%s)" % (_AA1, _POS, _AA1_MUT),
        _build_prot_sub,
        components=((_C.WILDTYPE, "wt"), (_C.POSITION, "pos"), (_C.MUTANT, "mt")),
    ),
    GrammarRule(
        MentionType.PROTEIN_MUTATION,
        r"(?:p\.)?(?P<wt3>%s)(?P<pos>%s)(?P<mt3>%s)" % (_AA3, _POS, _AA3_MUT),
        _build_prot_sub,
        components=((_C.WILDTYPE, "wt3"), (_C.POSITION, "pos"), (_C.MUTANT, "mt3")),
    ),
    GrammarRule(
        MentionType.PROTEIN_MUTATION,
        r"(?:p\.)?(?:(?P<wt>%s)|(?P<wt3>%s))(?P<pos>%s)fs" % (_AA1, _AA3, _POS),
        _build_prot_fs,
        components=((_C.WILDTYPE, "wt"), (_C.POSITION, "pos")),
    ),
    GrammarRule(
        MentionType.PROTEIN_MUTATION,
        r"(?:p\.)?(?:(?P<wt>%s)|(?P<wt3>%s))(?P<pos>%s)(?P<ed>del|dup)"
        % (_AA1, _AA3, _POS),
        _build_prot_edit,
        components=((_C.WILDTYPE, "wt"), (_C.POSITION, "pos")),
    ),
    GrammarRule(
        MentionType.PROTEIN_MUTATION,
        # The p. prefix is mandatory: a bare "1952ins306" is an
        # unspecified-level event, not a protein one.
        r"p\.(?P<pos>%s)(?:_(?P<pos2>%s))?(?P<ed>del|ins|dup)"
        r"(?:(?P<seq>%s+)|(?P<size>%s))?" % (_POS, _POS, _AA1, _POS),
        _build_prot_edit_pos,
        scan=False,
        components=((_C.POSITION, "pos"),),
    ),
    GrammarRule(
        MentionType.PROTEIN_ALLELE,
        r"(?:p\.)?(?P<wt3>%s)(?P<pos>%s)" % (_AA3, _POS),
        _build_prot_allele,
        components=((_C.WILDTYPE, "wt3"), (_C.POSITION, "pos")),
    ),
    GrammarRule(
        MentionType.PROTEIN_ALLELE,
        r"p\.(?P<wt>%s)(?P<pos>%s)" % (_AA1, _POS),
        _build_prot_allele,
        components=((_C.WILDTYPE, "wt"), (_C.POSITION, "pos")),
    ),
    GrammarRule(
        MentionType.PROTEIN_ALLELE,
        r"(?P<wt>%s)(?P<pos>%s)" % (_AA1, _POS),
        _build_prot_allele,
        # Bare one-letter alleles need two digits in running text; "T4"-style
        # shorthand is too noisy to claim.
        scan_pattern=r"(?P<wt>%s)(?P<pos>[1-9]\d+)" % _AA1,
        components=((_C.WILDTYPE, "wt"), (_C.POSITION, "pos")),
    ),
    GrammarRule(
        MentionType.PROTEIN_ALLELE,
        r"(?P<wtn>%s)\s+at\s+(?:codon|residue|position)\s+(?P<pos>%s)"
        % (_AA_NAME, _POS),
        _build_prot_allele,
        flags=re.IGNORECASE,
        components=((_C.WILDTYPE, "wtn"), (_C.POSITION, "pos")),
    ),
    GrammarRule(
        MentionType.PROTEIN_CHANGE,
        r"(?P<wtn>%s)\s+to\s+(?P<mtn>%s)" % (_AA_NAME, _AA_NAME),
        _build_prot_change,
        flags=re.IGNORECASE,
        components=((_C.WILDTYPE, "wtn"), (_C.MUTANT, "mtn")),
    ),
    GrammarRule(
        MentionType.PROTEIN_CHANGE,
        r"(?:p\.)?(?P<wt3>%s)\s+to\s+(?P<mt3>%s)" % (_AA3, _AA3),
        _build_prot_change,
        components=((_C.WILDTYPE, "wt3"), (_C.MUTANT, "mt3")),
    ),
    GrammarRule(
        MentionType.PROTEIN_CHANGE,
        r"(?:p\.)?(?P<wt>%s)%s(?P<mt>%s)" % (_AA1, _ARROW_SEP, _AA1_MUT),
        _build_prot_change,
        components=((_C.WILDTYPE, "wt"), (_C.MUTANT, "mt")),
    ),
    # --- natural-language sizes --------------------------------------------
    GrammarRule(
        MentionType.OTHER_MUTATION,
        r"(?P<num>\d{1,9}|%s)[ \-](?P<unit>%s)[ \-](?P<ed>deletion|insertion|duplication)"
        r"(?:\s+(?:starting\s+at|at)\s+position\s+(?P<pos>%s))?"
        % (_NUM_WORD, _UNIT, _POS),
        _build_other_nl,
        flags=re.IGNORECASE,
        components=((_C.POSITION, "pos"),),
    ),
    GrammarRule(
        MentionType.OTHER_MUTATION,
        r"(?P<ed>del|ins|dup)(?P<size>%s)" % _POS,
        _build_other_compact,
        scan=False,
    ),
    GrammarRule(
        MentionType.OTHER_MUTATION,
        r"(?P<pos>%s)(?:_(?P<pos2>%s))?(?P<ed>del|ins|dup)(?P<size>%s)?"
        % (_POS, _POS, _POS),
        _build_other_compact,
        scan=False,
    ),
    # --- regions -----------------------------------------------------------
    GrammarRule(
        MentionType.CNV,
        r"%s(?P<chrom>%s)\s*:?\s*(?P<c1>%s)\s*[-–]\s*(?P<c2>%s)"
        r"\s*(?:bp|base[ \-]?pairs?)?\s*(?P<ed>deletions?|duplications?|del|dup)"
        % (_CHR_WORD, _CHROM, _COORD, _COORD),
        _build_cnv,
        flags=re.IGNORECASE,
    ),
    GrammarRule(
        MentionType.CNV,
        r"(?P<ed>deletion|duplication|del|dup)\s+(?:(?:of|at|on|in)\s+)?"
        r"%s(?P<chrom>%s)\s*:\s*(?P<c1>%s)\s*[-–]\s*(?P<c2>%s)"
        r"(?:\s*(?:bp|base[ \-]?pairs?))?"
        % (_CHR_WORD, _CHROM, _COORD, _COORD),
        _build_cnv,
        flags=re.IGNORECASE,
    ),
    GrammarRule(
        MentionType.GENOMIC_REGION,
        r"%s(?P<chrom>%s)\s*:\s*(?P<c1>%s)\s*[-–]\s*(?P<c2>%s)"
        % (_CHR_WORD, _CHROM, _COORD, _COORD),
        _build_bp_region,
    ),
    GrammarRule(
        MentionType.CHROMOSOME,
        r"(?:%s)?(?P<chrom>[1-9]\d?|[XY])(?P<arm>[pq])(?P<band>\d+(?:\.\d+)?)"
        % _CHR_WORD,
        _build_band,
    ),
    GrammarRule(
        MentionType.CHROMOSOME,
        r"chromosome\s+(?P<chrom>[1-9]\d?|[XYxy])\s+(?P<arm>[pq])\s*"
        r"(?P<band>\d+(?:\.\d+)?)",
        _build_band,
        flags=re.IGNORECASE,
    ),
)

RULES_BY_TYPE: dict[MentionType, tuple[GrammarRule, ...]] = {}
for _rule in GRAMMAR_RULES:
    RULES_BY_TYPE.setdefault(_rule.mtype, ())
    RULES_BY_TYPE[_rule.mtype] = RULES_BY_TYPE[_rule.mtype] + (_rule,)


def parse_descriptor(surface: str, hint: MentionType) -> Descriptor:
    """Parse ``surface`` under the grammar for ``hint``.

    Raises :class:`ParseFailure` naming the first offending character when
    no rule for the type matches the whole string.
    """
    if hint in IDENTIFIER_TYPES:
        raise ValueError(f"{hint.name} mentions carry identifiers; "
                         "use parse_identifier")
    best = 0
    for rule in RULES_BY_TYPE[hint]:
        m = rule.rx.fullmatch(surface)
        if m is not None:
            try:
                return rule.build(m)
            except ValueError as exc:
                raise ParseFailure(surface, 0, str(exc)) from exc
        prefix = rule.rx.match(surface)
        if prefix is not None:
            best = max(best, prefix.end())
    raise ParseFailure(surface, best)


def parse_identifier(surface: str, hint: MentionType) -> str:
    """Normalize an identifier surface (dbSNP rs number, RefSeq accession)."""
    if hint not in IDENTIFIER_TYPES:
        raise ValueError(f"{hint.name} mentions carry descriptors; "
                         "use parse_descriptor")
    best = 0
    for rule in RULES_BY_TYPE[hint]:
        m = rule.rx.fullmatch(surface)
        if m is not None:
            return rule.build(m)
        prefix = rule.rx.match(surface)
        if prefix is not None:
            best = max(best, prefix.end())
    raise ParseFailure(surface, best)


def classify_surface(surface: str) -> tuple[MentionType, Descriptor | str]:
    """Find the mention type owning ``surface`` and parse it.

    Types are tried in priority order; the reported type is re-derived from
    the parsed descriptor so that equivalent forms classify identically.
    """
    best = 0
    for mtype in TYPE_PRIORITY:
        for rule in RULES_BY_TYPE[mtype]:
            m = rule.rx.fullmatch(surface)
            if m is not None:
                try:
                    built = rule.build(m)
                except (ValueError, ParseFailure):
                    continue
                if isinstance(built, str):
                    return mtype, built
                return classify_descriptor(built), built
            prefix = rule.rx.match(surface)
            if prefix is not None:
                best = max(best, prefix.end())
    raise ParseFailure(surface, best)
