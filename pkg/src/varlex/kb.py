"""Tab-separated variant knowledge base and gene lexicon loaders.

The KB is a strict seven-column TSV keyed by gene plus HGVS form.  Lookups
are exact string matches against canonical renderings; incomplete protein
mentions ("p.P799") hit a prefix index derived from the stored protein
forms.  All query results come back in a deterministic order so downstream
tie-breaks never depend on file order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, TextIO, Union

from .errors import DuplicateKey, FileUnreadable, MalformedRow
from .hgvs import SequenceLevel, VariantDescriptor, canonical_string

KB_HEADER = ("rsid", "ca_id", "gene", "dna_hgvs", "protein_hgvs", "ref", "alt")

_RSID_RX = re.compile(r"rs[1-9]\d*")
_CAID_RX = re.compile(r"CA\d+")
_ALLELE_RX = re.compile(r"[ACGTU]+")
_PROT_PREFIX_RX = re.compile(r"p\.([A-Z])(\d+)")


@dataclass(frozen=True)
class VariantRecord:
    """One KB row.  Absent fields are empty strings, never None."""

    rsid: str
    ca_id: str
    gene: str
    dna_hgvs: str
    protein_hgvs: str
    ref_allele: str
    alt_allele: str

    @property
    def rsid_number(self) -> int:
        return int(self.rsid[2:]) if self.rsid else 0

    def sort_key(self) -> tuple:
        # Rows with an rsid come first, lowest number winning; CA-only rows
        # order by accession so result lists stay reproducible.
        if self.rsid:
            return (0, self.rsid_number, self.ca_id)
        return (1, 0, self.ca_id)


def _open_text(source: Union[str, TextIO]) -> tuple[TextIO, bool]:
    if isinstance(source, str):
        try:
            return open(source, "r", encoding="utf-8"), True
        except OSError as exc:
            raise FileUnreadable(source, str(exc)) from exc
    return source, False


def _check_row(line_no: int, cols: list[str]) -> VariantRecord:
    if len(cols) != len(KB_HEADER):
        raise MalformedRow(
            line_no, "columns",
            f"expected {len(KB_HEADER)} tab-separated fields, got {len(cols)}",
        )
    rsid, ca_id, gene, dna, prot, ref, alt = (c.strip() for c in cols)
    if rsid and _RSID_RX.fullmatch(rsid) is None:
        raise MalformedRow(line_no, "rsid", f"bad rs identifier {rsid!r}")
    if ca_id and _CAID_RX.fullmatch(ca_id) is None:
        raise MalformedRow(line_no, "ca_id", f"bad ClinGen allele id {ca_id!r}")
    if not gene or any(ch.isspace() for ch in gene):
        raise MalformedRow(line_no, "gene", f"bad gene symbol {gene!r}")
    if not rsid and not ca_id:
        raise MalformedRow(line_no, "rsid", "row carries no identifier")
    if not dna and not prot:
        raise MalformedRow(line_no, "dna_hgvs", "row carries no HGVS form")
    for column, allele in (("ref", ref), ("alt", alt)):
        if allele and _ALLELE_RX.fullmatch(allele) is None:
            raise MalformedRow(line_no, column, f"bad allele {allele!r}")
    return VariantRecord(rsid, ca_id, gene, dna, prot, ref, alt)


class KnowledgeBase:
    """In-memory exact-match indexes over the KB rows."""

    def __init__(self, records: Iterable[VariantRecord]):
        self.records: tuple[VariantRecord, ...] = tuple(records)
        self._by_gene_dna: dict[tuple[str, str], list[VariantRecord]] = {}
        self._by_gene_prot: dict[tuple[str, str], list[VariantRecord]] = {}
        self._by_gene_prefix: dict[tuple[str, str], list[VariantRecord]] = {}
        self._by_dna: dict[str, list[VariantRecord]] = {}
        self._by_prot: dict[str, list[VariantRecord]] = {}
        self._by_prefix: dict[str, list[VariantRecord]] = {}
        self._by_rsid: dict[str, list[VariantRecord]] = {}
        for rec in self.records:
            if rec.dna_hgvs:
                self._by_gene_dna.setdefault((rec.gene, rec.dna_hgvs), []).append(rec)
                self._by_dna.setdefault(rec.dna_hgvs, []).append(rec)
            if rec.protein_hgvs:
                self._by_gene_prot.setdefault((rec.gene, rec.protein_hgvs), []).append(rec)
                self._by_prot.setdefault(rec.protein_hgvs, []).append(rec)
                pm = _PROT_PREFIX_RX.match(rec.protein_hgvs)
                if pm is not None:
                    key = pm.group(0)
                    self._by_gene_prefix.setdefault((rec.gene, key), []).append(rec)
                    self._by_prefix.setdefault(key, []).append(rec)
            if rec.rsid:
                self._by_rsid.setdefault(rec.rsid, []).append(rec)

    @staticmethod
    def _ordered(recs: Iterable[VariantRecord]) -> list[VariantRecord]:
        seen: dict[VariantRecord, None] = {}
        for rec in recs:
            seen.setdefault(rec)
        return sorted(seen, key=VariantRecord.sort_key)

    def lookup(
        self, gene: str | None, descriptor: VariantDescriptor
    ) -> list[VariantRecord]:
        """All records matching the descriptor, best identifiers first.

        With a gene the gene-scoped index is consulted; without one the
        match runs KB-wide.  Incomplete protein mentions match any record
        sharing their wild-type and position.
        """
        canon = canonical_string(descriptor)
        protein = descriptor.level is SequenceLevel.PROTEIN
        if protein and descriptor.is_incomplete:
            table, global_table = self._by_gene_prefix, self._by_prefix
        elif protein:
            table, global_table = self._by_gene_prot, self._by_prot
        else:
            table, global_table = self._by_gene_dna, self._by_dna
        if gene:
            return self._ordered(table.get((gene, canon), []))
        return self._ordered(global_table.get(canon, []))

    def lookup_rsid(self, rsid: str) -> list[VariantRecord]:
        # Stored ids are lowercase; accept Rs/RS spellings from raw text.
        return self._ordered(self._by_rsid.get(rsid.lower(), []))

    def __len__(self) -> int:
        return len(self.records)


def load_kb(source: Union[str, TextIO]) -> KnowledgeBase:
    """Read a seven-column KB TSV, validating every row.

    Raises FileUnreadable, MalformedRow (with line and column), or
    DuplicateKey when one (gene, HGVS) key claims two different rs numbers.
    """
    fh, owned = _open_text(source)
    try:
        lines = fh.read().splitlines()
    finally:
        if owned:
            fh.close()
    if not lines or [c.strip() for c in lines[0].split("\t")] != list(KB_HEADER):
        raise MalformedRow(1, "header", "missing or wrong header line")
    records: list[VariantRecord] = []
    first_rsid: dict[tuple[str, str], tuple[int, str]] = {}
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        rec = _check_row(line_no, line.split("\t"))
        for hgvs in (rec.dna_hgvs, rec.protein_hgvs):
            if not hgvs or not rec.rsid:
                continue
            key = (rec.gene, hgvs)
            prior = first_rsid.get(key)
            if prior is None:
                first_rsid[key] = (line_no, rec.rsid)
            elif prior[1] != rec.rsid:
                raise DuplicateKey(line_no, key, prior[1], rec.rsid)
        records.append(rec)
    return KnowledgeBase(records)


def load_genes(source: Union[str, TextIO]) -> frozenset[str]:
    """Read a gene lexicon: one symbol per line, blanks skipped."""
    fh, owned = _open_text(source)
    try:
        lines = fh.read().splitlines()
    finally:
        if owned:
            fh.close()
    symbols: set[str] = set()
    for line_no, line in enumerate(lines, start=1):
        symbol = line.strip()
        if not symbol:
            continue
        if any(ch.isspace() for ch in symbol):
            raise MalformedRow(line_no, "symbol", f"bad gene symbol {symbol!r}")
        symbols.add(symbol)
    return frozenset(symbols)
