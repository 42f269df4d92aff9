"""Map recognized mentions to stable variant identifiers.

The preference ladder runs ClinGen allele id, then rs number with alleles,
then bare rs number, then a gene-anchored HGVS string, and finally the
unnormalized marker "-".  A policy reorders the ladder; what a mention can
ever receive is limited by how complete it is and what the knowledge base
holds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import IntEnum

from .hgvs import MentionType, VariantDescriptor, canonical_string
from .kb import KnowledgeBase, VariantRecord
from .recognizer import GeneMention, Mention


class IdKind(IntEnum):
    """Identifier tiers, ordered by specificity (higher is more specific)."""

    UNNORMALIZED = 0
    GENE_ANCHORED = 1
    RSID = 2
    RS_ALLELE = 3
    CAID = 4


@dataclass(frozen=True)
class NormalizedId:
    """A rendered-comparable identifier.  The ambiguity flag never takes
    part in equality; two mentions resolving to the same id group together
    whether or not either resolution was ambiguous."""

    kind: IdKind
    ca: str = ""
    rsid: str = ""
    ref: str = ""
    alt: str = ""
    gene: str = ""
    hgvs: str = ""
    ambiguous: bool = field(default=False, compare=False)

    def render(self) -> str:
        if self.kind is IdKind.CAID:
            return self.ca
        if self.kind is IdKind.RS_ALLELE:
            return f"{self.rsid}({self.ref}>{self.alt})"
        if self.kind is IdKind.RSID:
            return self.rsid
        if self.kind is IdKind.GENE_ANCHORED:
            return f"{self.gene}: {self.hgvs}"
        return "-"


UNNORMALIZED = NormalizedId(IdKind.UNNORMALIZED)

_RS_ALLELE_RX = re.compile(r"(rs[1-9]\d*)\(([A-Z*]+)>([A-Z*]+)\)")
_RSID_RX = re.compile(r"rs[1-9]\d*")
_CAID_RX = re.compile(r"CA\d+")


def parse_rendered(text: str) -> NormalizedId:
    """Inverse of :meth:`NormalizedId.render`."""
    if text == "-":
        return UNNORMALIZED
    if _CAID_RX.fullmatch(text):
        return NormalizedId(IdKind.CAID, ca=text)
    m = _RS_ALLELE_RX.fullmatch(text)
    if m:
        return NormalizedId(
            IdKind.RS_ALLELE, rsid=m.group(1), ref=m.group(2), alt=m.group(3)
        )
    if _RSID_RX.fullmatch(text):
        return NormalizedId(IdKind.RSID, rsid=text)
    gene, sep, hgvs = text.partition(": ")
    if sep and gene and hgvs:
        return NormalizedId(IdKind.GENE_ANCHORED, gene=gene, hgvs=hgvs)
    raise ValueError(f"unrecognized identifier rendering {text!r}")


_POLICY_NAMES = {
    "caid": IdKind.CAID,
    "rs_allele": IdKind.RS_ALLELE,
    "rsid": IdKind.RSID,
    "gene": IdKind.GENE_ANCHORED,
}


@dataclass(frozen=True)
class NormalizationPolicy:
    """The identifier tiers to try, most preferred first."""

    order: tuple[IdKind, ...]

    @classmethod
    def from_string(cls, names: str) -> "NormalizationPolicy":
        kinds = []
        for name in names.split(","):
            name = name.strip().lower()
            if name not in _POLICY_NAMES:
                raise ValueError(
                    f"unknown policy tier {name!r}; expected one of "
                    + ", ".join(_POLICY_NAMES)
                )
            kind = _POLICY_NAMES[name]
            if kind not in kinds:
                kinds.append(kind)
        if not kinds:
            raise ValueError("empty normalization policy")
        return cls(tuple(kinds))


DEFAULT_POLICY = NormalizationPolicy(
    (IdKind.CAID, IdKind.RS_ALLELE, IdKind.RSID, IdKind.GENE_ANCHORED)
)


def _identity(rec: VariantRecord) -> tuple[str, str]:
    return (rec.rsid, rec.ca_id)


def candidate_records(
    kb: KnowledgeBase, gene: str | None, descriptor: VariantDescriptor
) -> list[VariantRecord]:
    """KB rows a mention could mean: all exact matches, narrowed to the
    gene context when that still leaves something."""
    records = kb.lookup(None, descriptor)
    if gene:
        scoped = [r for r in records if r.gene == gene]
        if scoped:
            return scoped
    return records


def normalize(
    mention: Mention,
    kb: KnowledgeBase,
    gene_context: str | None = None,
    policy: NormalizationPolicy = DEFAULT_POLICY,
) -> NormalizedId:
    """Resolve one mention to the best identifier the policy allows.

    dbSNP mentions carry their own rs number.  Descriptor mentions are
    looked up KB-wide; a gene context narrows multiple hits, and whatever
    ambiguity survives is flagged on the result.  Incomplete mentions
    (no mutant allele) never receive allele-specific identifiers.
    """
    if mention.mtype is MentionType.SNP and mention.identifier:
        return NormalizedId(IdKind.RSID, rsid=mention.identifier)
    descriptor = mention.descriptor
    if not isinstance(descriptor, VariantDescriptor):
        return UNNORMALIZED
    gene = gene_context or mention.gene_context or mention.gene_hint
    records = candidate_records(kb, gene, descriptor)
    ambiguous = len({_identity(r) for r in records}) > 1
    best = records[0] if records else None
    incomplete = descriptor.is_incomplete
    for kind in policy.order:
        if kind is IdKind.CAID:
            if best is not None and best.ca_id and not incomplete:
                return NormalizedId(IdKind.CAID, ca=best.ca_id, ambiguous=ambiguous)
        elif kind is IdKind.RS_ALLELE:
            if (
                best is not None
                and best.rsid
                and best.ref_allele
                and best.alt_allele
                and not incomplete
            ):
                return NormalizedId(
                    IdKind.RS_ALLELE,
                    rsid=best.rsid,
                    ref=best.ref_allele,
                    alt=best.alt_allele,
                    ambiguous=ambiguous,
                )
        elif kind is IdKind.RSID:
            if best is not None and best.rsid:
                return NormalizedId(
                    IdKind.RSID, rsid=best.rsid, ambiguous=ambiguous
                )
        elif kind is IdKind.GENE_ANCHORED:
            if gene:
                return NormalizedId(
                    IdKind.GENE_ANCHORED,
                    gene=gene,
                    hgvs=canonical_string(descriptor),
                    ambiguous=ambiguous,
                )
    return UNNORMALIZED


def _midpoint(start: int, end: int) -> float:
    return (start + end) / 2.0


def resolve_gene_context(
    mention: Mention,
    gene_mentions: list[GeneMention],
    sentences: list[tuple[int, int]] | None = None,
) -> str | None:
    """Pick the gene a mention most plausibly belongs to.

    A gene fused onto the mention always wins.  Otherwise the nearest gene
    in the same sentence (by byte midpoint, earlier on ties), then the
    nearest gene anywhere before the mention.  Without sentence spans the
    whole text counts as one sentence.
    """
    if mention.gene_hint:
        return mention.gene_hint
    if not gene_mentions:
        return None
    mid = _midpoint(mention.start, mention.end)
    if sentences is None:
        sentence = (0, float("inf"))
    else:
        sentence = next(
            (s for s in sentences if s[0] <= mention.start < s[1]),
            (0, float("inf")),
        )
    in_sentence = [
        g
        for g in gene_mentions
        if sentence[0] <= _midpoint(g.start, g.end) < sentence[1]
    ]
    if in_sentence:
        best = min(
            in_sentence,
            key=lambda g: (abs(_midpoint(g.start, g.end) - mid), g.start),
        )
        return best.symbol
    preceding = [g for g in gene_mentions if g.end <= mention.start]
    if preceding:
        best = min(
            preceding,
            key=lambda g: (mid - _midpoint(g.start, g.end), g.start),
        )
        return best.symbol
    return None
