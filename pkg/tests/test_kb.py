import random

import pytest

from varlex import (
    DuplicateKey,
    FileUnreadable,
    KnowledgeBase,
    MalformedRow,
    VariantRecord,
    classify_surface,
    load_genes,
    load_kb,
)
from varlex.kb import KB_HEADER

import oracles

HEADER = "\t".join(KB_HEADER)


def desc(surface):
    return classify_surface(surface)[1]


def write_kb(tmp_path, rows, name="kb.tsv"):
    path = tmp_path / name
    path.write_text("\n".join([HEADER] + rows) + "\n", encoding="utf-8")
    return str(path)


def test_fixture_loads(kb):
    assert len(kb) == 5
    record = kb.lookup_rsid("rs113488022")[0]
    assert record.gene == "BRAF"
    assert record.ca_id == "CA123643"
    assert record.protein_hgvs == "p.V600E"


def test_lookup_by_protein_hgvs(kb):
    d = desc("V600E")
    records = kb.lookup("BRAF", d)
    assert [r.rsid for r in records] == ["rs113488022"]


def test_lookup_by_dna_hgvs(kb):
    d = desc("c.1799T>A")
    records = kb.lookup("BRAF", d)
    assert [r.ca_id for r in records] == ["CA123643"]


def test_incomplete_mention_matches_position_prefix(kb):
    d = desc("P799")
    records = kb.lookup("TRPV4", d)
    assert [r.rsid for r in records] == ["rs121912637"]


def test_lookup_wrong_gene_is_empty(kb):
    d = desc("V600E")
    assert kb.lookup("KRAS", d) == []


def test_global_lookup_with_empty_gene(kb):
    d = desc("V600E")
    records = kb.lookup("", d)
    assert [r.rsid for r in records] == ["rs113488022"]


def test_lookup_rsid_number_and_casing(kb):
    assert kb.lookup_rsid("RS763780") == kb.lookup_rsid("rs763780")
    assert kb.lookup_rsid("763780") == []
    assert kb.lookup_rsid("rs999999999") == []


def test_rows_without_rsid_sort_after_rsid_rows(kb):
    d = desc("R175H")
    records = kb.lookup("TP53", d)
    assert [r.ca_id for r in records] == ["CA555555"]
    assert records[0].rsid == ""


def test_record_ordering_is_numeric_not_lexical():
    a = VariantRecord("rs9", "", "G1", "c.1A>T", "", "A", "T")
    b = VariantRecord("rs10", "", "G1", "c.1A>T", "", "A", "T")
    c = VariantRecord("", "CA7", "G1", "c.1A>T", "", "A", "T")
    kb = KnowledgeBase((b, c, a))
    got = kb.lookup("G1", desc("c.1A>T"))
    assert [r.rsid or r.ca_id for r in got] == ["rs9", "rs10", "CA7"]


def test_missing_file_raises(tmp_path):
    with pytest.raises(FileUnreadable):
        load_kb(str(tmp_path / "absent.tsv"))


def test_header_must_match(tmp_path):
    path = tmp_path / "kb.tsv"
    path.write_text("rsid\tgene\n", encoding="utf-8")
    with pytest.raises(MalformedRow) as err:
        load_kb(str(path))
    assert err.value.line_no == 1


@pytest.mark.parametrize("row,column", [
    ("xs1\tCA1\tBRAF\tc.1A>T\t\tA\tT", "rsid"),
    ("rs01\tCA1\tBRAF\tc.1A>T\t\tA\tT", "rsid"),
    ("rs1\tCB1\tBRAF\tc.1A>T\t\tA\tT", "ca_id"),
    ("rs1\tCA1\t\tc.1A>T\t\tA\tT", "gene"),
    ("rs1\tCA1\tBR AF\tc.1A>T\t\tA\tT", "gene"),
    ("\t\tBRAF\tc.1A>T\t\tA\tT", "rsid"),
    ("rs1\tCA1\tBRAF\t\t\tA\tT", "dna_hgvs"),
    ("rs1\tCA1\tBRAF\tc.1A>T\t\tQ\tT", "ref"),
    ("rs1\tCA1\tBRAF\tc.1A>T\t\tA\tZ", "alt"),
    ("rs1\tCA1\tBRAF\tc.1A>T\tp.V600E\tA", "columns"),
])
def test_bad_rows_name_the_offending_column(tmp_path, row, column):
    with pytest.raises(MalformedRow) as err:
        load_kb(write_kb(tmp_path, [row]))
    assert err.value.column == column
    assert err.value.line_no == 2


def test_conflicting_rsids_for_same_variant_rejected(tmp_path):
    rows = [
        "rs1\t\tBRAF\tc.1A>T\t\tA\tT",
        "rs2\t\tBRAF\tc.1A>T\t\tA\tT",
    ]
    with pytest.raises(DuplicateKey) as err:
        load_kb(write_kb(tmp_path, rows))
    assert err.value.first == "rs1"
    assert err.value.second == "rs2"


def test_repeated_identical_mapping_allowed(tmp_path):
    rows = [
        "rs1\tCA1\tBRAF\tc.1A>T\t\tA\tT",
        "rs1\tCA2\tBRAF\tc.1A>T\tp.K1N\tA\tT",
    ]
    kb = load_kb(write_kb(tmp_path, rows))
    assert len(kb) == 2


def test_blank_lines_skipped(tmp_path):
    text = HEADER + "\n\nrs1\tCA1\tBRAF\tc.1A>T\t\tA\tT\n\n"
    path = tmp_path / "kb.tsv"
    path.write_text(text, encoding="utf-8")
    assert len(load_kb(str(path))) == 1


def test_load_genes(tmp_path):
    path = tmp_path / "genes.txt"
    path.write_text("BRAF\n\n  KRAS \nTP53\n", encoding="utf-8")
    assert load_genes(str(path)) == frozenset({"BRAF", "KRAS", "TP53"})


def test_load_genes_rejects_embedded_whitespace(tmp_path):
    path = tmp_path / "genes.txt"
    path.write_text("BRAF\nTP 53\n", encoding="utf-8")
    with pytest.raises(MalformedRow) as err:
        load_genes(str(path))
    assert err.value.line_no == 2


def test_load_genes_missing_file(tmp_path):
    with pytest.raises(FileUnreadable):
        load_genes(str(tmp_path / "absent.txt"))


# Cross-check indexed lookups against a row-scanning oracle on a bigger
# generated table.

GENES = ["BRAF", "KRAS", "TP53", "EGFR", "IL17F", "TRPV4", "PTEN", "MYC"]
NUCS = "ACGT"
AAS = "ACDEFGHIKLMNPQRSTVWY"


def random_rows(rng, n):
    rows = []
    used = set()
    for i in range(n):
        gene = rng.choice(GENES)
        pos = rng.randint(1, 2500)
        ref, alt = rng.sample(NUCS, 2)
        dna = f"c.{pos}{ref}>{alt}" if rng.random() < 0.8 else ""
        wt, mt = rng.sample(AAS, 2)
        prot = f"p.{wt}{rng.randint(1, 900)}{mt}" if rng.random() < 0.7 else ""
        if not dna and not prot:
            dna = f"c.{pos}{ref}>{alt}"
        key = (gene, dna, prot)
        if key in used:
            continue
        used.add(key)
        rsid = f"rs{rng.randint(1, 10 ** 9)}" if rng.random() < 0.85 else ""
        ca = f"CA{rng.randint(1, 10 ** 7)}" if rng.random() < 0.6 else ""
        if not rsid and not ca:
            ca = f"CA{rng.randint(1, 10 ** 7)}"
        alleles = (ref, alt) if dna and rng.random() < 0.9 else ("", "")
        rows.append("\t".join((rsid, ca, gene, dna, prot, *alleles)))
    return rows


def test_lookup_agrees_with_row_scan_oracle(tmp_path):
    rng = random.Random(20260821)
    rows = random_rows(rng, 220)
    path = write_kb(tmp_path, rows, "big.tsv")
    kb = load_kb(path)
    raw = oracles.read_raw_rows(path)

    probes = []
    for _ in range(120):
        gene = rng.choice(GENES + [""])
        if rng.random() < 0.5:
            pos = rng.randint(1, 2500)
            ref, alt = rng.sample(NUCS, 2)
            probes.append((gene, desc(f"c.{pos}{ref}>{alt}")))
        elif rng.random() < 0.6:
            wt, mt = rng.sample(AAS, 2)
            probes.append((gene, desc(f"{wt}{rng.randint(1, 900)}{mt}")))
        else:
            wt = rng.choice(AAS)
            probes.append((gene, desc(f"p.{wt}{rng.randint(1, 900)}")))
    # Salt in probes guaranteed to hit rows.
    for line in rng.sample(rows, 40):
        rsid, ca, gene, dna, prot, ref, alt = line.split("\t")
        surface = dna or prot
        probes.append((gene, desc(surface)))
        if prot:
            probes.append((gene, desc(prot[:-1])))

    hits = 0
    for gene, descriptor in probes:
        got = [(r.rsid, r.ca_id, r.gene) for r in kb.lookup(gene, descriptor)]
        want = oracles.brute_force_lookup(raw, gene, descriptor)
        assert got == want, (gene, descriptor.raw)
        hits += bool(got)
    assert hits >= 40
