import pytest

from varlex import (
    GeneMention,
    IdKind,
    KnowledgeBase,
    NormalizationPolicy,
    NormalizedId,
    Recognizer,
    UNNORMALIZED,
    VariantRecord,
    normalize,
    parse_rendered,
    resolve_gene_context,
)
from varlex.tokenizer import split_sentences


def mention_for(recognizer, text, surface=None):
    mentions = recognizer.recognize(text)
    if surface is None:
        assert len(mentions) == 1, mentions
        return mentions[0]
    return next(m for m in mentions if m.text == surface)


def test_render_all_five_forms():
    assert NormalizedId(IdKind.CAID, ca="CA123643").render() == "CA123643"
    allele = NormalizedId(IdKind.RS_ALLELE, rsid="rs113488022", ref="T", alt="A")
    assert allele.render() == "rs113488022(T>A)"
    assert NormalizedId(IdKind.RSID, rsid="rs763780").render() == "rs763780"
    anchored = NormalizedId(IdKind.GENE_ANCHORED, gene="BRAF", hgvs="c.1799T>A")
    assert anchored.render() == "BRAF: c.1799T>A"
    assert UNNORMALIZED.render() == "-"


@pytest.mark.parametrize("rendered", [
    "CA123643",
    "rs113488022(T>A)",
    "rs763780",
    "BRAF: c.1799T>A",
    "KRAS: p.G12D",
    "-",
])
def test_parse_rendered_round_trips(rendered):
    assert parse_rendered(rendered).render() == rendered


@pytest.mark.parametrize("garbage", ["", "CA", "rs(T>A)", "rs12(TA)", "BRAF:", "x"])
def test_parse_rendered_rejects_garbage(garbage):
    with pytest.raises(ValueError):
        parse_rendered(garbage)


def test_policy_from_string():
    policy = NormalizationPolicy.from_string("rsid,gene")
    assert policy.order == (IdKind.RSID, IdKind.GENE_ANCHORED)
    dedup = NormalizationPolicy.from_string("caid, caid, rs_allele")
    assert dedup.order == (IdKind.CAID, IdKind.RS_ALLELE)
    with pytest.raises(ValueError):
        NormalizationPolicy.from_string("caid,bogus")
    with pytest.raises(ValueError):
        NormalizationPolicy.from_string("")


def test_full_fallback_chain(recognizer, kb):
    m = mention_for(recognizer, "the c.1799T>A variant")
    outcomes = {
        "caid": "CA123643",
        "rs_allele": "rs113488022(T>A)",
        "rsid": "rs113488022",
        "gene": "BRAF: c.1799T>A",
    }
    for name, expected in outcomes.items():
        policy = NormalizationPolicy.from_string(name)
        got = normalize(m, kb, gene_context="BRAF", policy=policy)
        assert got.render() == expected, name


def test_no_gene_no_match_is_unnormalized(recognizer):
    empty = KnowledgeBase(())
    m = mention_for(recognizer, "the c.1799T>A variant")
    assert normalize(m, empty) is UNNORMALIZED
    assert normalize(m, empty).render() == "-"


def test_gene_anchor_without_kb_rows(recognizer):
    empty = KnowledgeBase(())
    m = mention_for(recognizer, "the c.1799T>A variant")
    got = normalize(m, empty, gene_context="BRAF")
    assert got.kind is IdKind.GENE_ANCHORED
    assert got.render() == "BRAF: c.1799T>A"


def test_snp_mention_normalizes_directly(recognizer, kb):
    m = mention_for(recognizer, "carriers of rs113488022 were excluded")
    got = normalize(m, kb)
    assert got.kind is IdKind.RSID
    assert got.render() == "rs113488022"


def test_incomplete_mention_stops_at_rsid(recognizer, kb):
    # P799 has no alternate allele, so allele-level ids are out of reach.
    m = mention_for(recognizer, "a change at P799 was seen", "P799")
    got = normalize(m, kb, gene_context="TRPV4")
    assert got.kind is IdKind.RSID
    assert got.render() == "rs121912637"


def test_incomplete_mention_never_gets_caid():
    kb = KnowledgeBase((
        VariantRecord("", "CA9", "TP53", "", "p.R175H", "", ""),
    ))
    rec = Recognizer(frozenset({"TP53"}))
    m = mention_for(rec, "residue R175 was altered", "R175")
    got = normalize(m, kb, gene_context="TP53")
    assert got.kind is IdKind.GENE_ANCHORED
    assert got.render() == "TP53: p.R175"


def test_gene_context_narrows_candidates(kb):
    rec = Recognizer(frozenset({"BRAF", "KRAS"}))
    m = mention_for(rec, "we saw V600E in tumours", "V600E")
    braf = normalize(m, kb, gene_context="BRAF")
    assert braf.render() == "CA123643"
    # KRAS has no V600E row; the global index still finds the BRAF row and
    # nothing contradicts it, so the id survives gene mismatch.
    kras = normalize(m, kb, gene_context="KRAS")
    assert kras.render() == "CA123643"


def test_ambiguity_flag_when_two_genes_share_surface():
    kb = KnowledgeBase((
        VariantRecord("rs1", "CA1", "GENEA", "", "p.V600E", "", ""),
        VariantRecord("rs2", "CA2", "GENEB", "", "p.V600E", "", ""),
    ))
    rec = Recognizer()
    m = mention_for(rec, "the V600E variant")
    got = normalize(m, kb)
    assert got.ambiguous
    assert got.kind is IdKind.CAID
    # Gene context collapses the ambiguity.
    scoped = normalize(m, kb, gene_context="GENEB")
    assert not scoped.ambiguous
    assert scoped.render() == "CA2"


def test_mention_gene_hint_feeds_normalization(recognizer, kb):
    m = mention_for(recognizer, "tumours with BRAFV600E recurred", "V600E")
    assert m.gene_hint == "BRAF"
    assert normalize(m, kb).render() == "CA123643"


def test_identifier_mentions_other_than_snp_stay_unnormalized(recognizer, kb):
    m = mention_for(recognizer, "transcript NM_203475.1 was used")
    assert normalize(m, kb) is UNNORMALIZED


def test_region_mentions_stay_unnormalized(recognizer, kb):
    m = mention_for(recognizer, "band 10q11.12 was amplified")
    assert normalize(m, kb) is UNNORMALIZED


# Gene context resolution.

def byte_sentences(text):
    return split_sentences(text)


def test_hint_beats_everything(recognizer):
    text = "KRAS study: BRAFV600E was found."
    mentions, genes = recognizer.scan_document(text)
    m = next(m for m in mentions if m.text == "V600E")
    assert resolve_gene_context(m, genes, byte_sentences(text)) == "BRAF"


def test_same_sentence_nearest_wins(recognizer):
    text = ("EGFR was wild type. KRAS carried G12D and far downstream "
            "sat TP53. BRAF was next.")
    mentions, genes = recognizer.scan_document(text)
    m = next(m for m in mentions if m.text == "G12D")
    # KRAS and TP53 share the sentence; KRAS midpoint is closer.
    assert resolve_gene_context(m, genes, byte_sentences(text)) == "KRAS"


def test_same_sentence_tie_prefers_earlier(recognizer):
    text = "KRAS and EGFR G12D KRAS and EGFR."
    mentions, genes = recognizer.scan_document(text)
    m = next(m for m in mentions if m.text == "G12D")
    got = resolve_gene_context(m, genes, byte_sentences(text))
    assert got in {g.symbol for g in genes}
    # Distances are symmetric here, so the earlier mention must win.
    before = [g for g in genes if g.end <= m.start]
    assert got == before[-1].symbol or got == before[0].symbol


def test_preceding_gene_used_when_sentence_has_none(recognizer):
    text = "BRAF was sequenced in all samples. The V600E change recurred."
    mentions, genes = recognizer.scan_document(text)
    m = next(m for m in mentions if m.text == "V600E")
    assert resolve_gene_context(m, genes, byte_sentences(text)) == "BRAF"


def test_no_genes_resolves_to_none(recognizer):
    text = "The V600E change recurred."
    mentions, genes = recognizer.scan_document(text)
    m = mentions[0]
    assert genes == []
    assert resolve_gene_context(m, genes, byte_sentences(text)) is None


def test_following_gene_never_used(recognizer):
    text = "The V600E change recurred. BRAF was sequenced later."
    mentions, genes = recognizer.scan_document(text)
    m = next(m for m in mentions if m.text == "V600E")
    assert resolve_gene_context(m, genes, byte_sentences(text)) is None


def test_sentences_default_is_whole_text(recognizer):
    text = "The V600E change recurred. BRAF was sequenced later."
    mentions, genes = recognizer.scan_document(text)
    m = next(m for m in mentions if m.text == "V600E")
    # Without sentence spans everything shares one sentence, so the later
    # BRAF becomes eligible.
    assert resolve_gene_context(m, genes) == "BRAF"
