"""Group the mentions of one document that talk about the same variant.

Two mentions link when they normalize to the same identifier, when they
share a knowledge-base record, or when one is the incomplete form of the
other ("P799" next to "P799L").  Groups are the transitive closure of those
links; every member then reports the most specific identifier the group
reached together.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hgvs import EditKind, VariantDescriptor
from .kb import KnowledgeBase
from .normalizer import IdKind, NormalizedId, candidate_records
from .recognizer import Mention


def is_prefix_compatible(a: VariantDescriptor, b: VariantDescriptor) -> bool:
    """True when one descriptor is the other minus its mutant allele.

    Both must be substitutions at the same level and position with the same
    wild-type; exactly one of them names a mutant.
    """
    if not isinstance(a, VariantDescriptor) or not isinstance(b, VariantDescriptor):
        return False
    if (
        a.edit_kind is not EditKind.SUBSTITUTION
        or b.edit_kind is not EditKind.SUBSTITUTION
    ):
        return False
    if a.level is not b.level:
        return False
    if a.position is None or a.position != b.position:
        return False
    if a.ref_allele is None or a.ref_allele != b.ref_allele:
        return False
    return (a.alt_allele is None) != (b.alt_allele is None)


@dataclass(frozen=True)
class VariantGroup:
    """Indices into the mention list, plus the identifier they share."""

    members: tuple[int, ...]
    group_id: NormalizedId
    ambiguous: bool = False


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def _effective_gene(m: Mention) -> str | None:
    return m.gene_context or m.gene_hint


def _genes_agree(a: Mention, b: Mention) -> bool:
    ga, gb = _effective_gene(a), _effective_gene(b)
    return ga is None or gb is None or ga == gb


def group_mentions(
    mentions: list[Mention],
    ids: list[NormalizedId],
    kb: KnowledgeBase,
) -> list[VariantGroup]:
    """Partition a document's mentions into identity groups.

    ``ids`` is the per-mention normalization result, parallel to
    ``mentions``.  Groups come back ordered by first member; members are
    index-sorted.  The group identifier is the most specific tier any
    member reached, lowest rendering on ties, and the group is flagged
    ambiguous when fully-specified members point at conflicting variants.
    """
    n = len(mentions)
    record_sets = []
    for m in mentions:
        if isinstance(m.descriptor, VariantDescriptor):
            records = candidate_records(kb, _effective_gene(m), m.descriptor)
        elif m.identifier and m.identifier.startswith("rs"):
            records = kb.lookup_rsid(m.identifier)
        else:
            records = []
        record_sets.append(frozenset(records))

    uf = _UnionFind(n)
    for i in range(n):
        for j in range(i + 1, n):
            if _linked(mentions[i], ids[i], record_sets[i],
                       mentions[j], ids[j], record_sets[j]):
                uf.union(i, j)

    clusters: dict[int, list[int]] = {}
    for i in range(n):
        clusters.setdefault(uf.find(i), []).append(i)

    groups = []
    for root in sorted(clusters):
        members = tuple(sorted(clusters[root]))
        group_id = _best_id(members, ids)
        ambiguous = _is_ambiguous(members, mentions, ids, record_sets)
        groups.append(VariantGroup(members, group_id, ambiguous))
    return groups


def _linked(
    ma: Mention, ia: NormalizedId, ra: frozenset,
    mb: Mention, ib: NormalizedId, rb: frozenset,
) -> bool:
    if (
        ia.kind is not IdKind.UNNORMALIZED
        and ib.kind is not IdKind.UNNORMALIZED
        and ia.render() == ib.render()
    ):
        return True
    if ra & rb:
        return True
    if (
        isinstance(ma.descriptor, VariantDescriptor)
        and isinstance(mb.descriptor, VariantDescriptor)
        and is_prefix_compatible(ma.descriptor, mb.descriptor)
        and _genes_agree(ma, mb)
    ):
        return True
    return False


def _best_id(members: tuple[int, ...], ids: list[NormalizedId]) -> NormalizedId:
    # Most specific tier wins; the lexicographically lowest rendering
    # breaks ties inside a tier.
    return min(
        (ids[i] for i in members),
        key=lambda nid: (-nid.kind, nid.render()),
    )


def _is_ambiguous(
    members: tuple[int, ...],
    mentions: list[Mention],
    ids: list[NormalizedId],
    record_sets: list[frozenset],
) -> bool:
    if any(ids[i].ambiguous for i in members):
        return True
    # Count distinct identities among members that fully specify a variant;
    # identities merge when renderings match or KB records overlap.
    decided = []
    for i in members:
        if ids[i].kind is IdKind.UNNORMALIZED:
            continue
        d = mentions[i].descriptor
        if isinstance(d, VariantDescriptor) and d.is_incomplete:
            continue
        decided.append(i)
    if len(decided) < 2:
        return False
    uf = _UnionFind(len(decided))
    for a in range(len(decided)):
        for b in range(a + 1, len(decided)):
            i, j = decided[a], decided[b]
            if ids[i].render() == ids[j].render() or (
                record_sets[i] & record_sets[j]
            ):
                uf.union(a, b)
    roots = {uf.find(k) for k in range(len(decided))}
    return len(roots) > 1


def propagated_ids(
    mentions: list[Mention],
    ids: list[NormalizedId],
    groups: list[VariantGroup],
) -> list[NormalizedId]:
    """Per-mention ids after groups share their best identifier."""
    out = list(ids)
    for group in groups:
        if group.group_id.kind is IdKind.UNNORMALIZED:
            continue
        shared = NormalizedId(
            kind=group.group_id.kind,
            ca=group.group_id.ca,
            rsid=group.group_id.rsid,
            ref=group.group_id.ref,
            alt=group.group_id.alt,
            gene=group.group_id.gene,
            hgvs=group.group_id.hgvs,
            ambiguous=group.ambiguous,
        )
        for i in group.members:
            out[i] = shared
    return out
