"""
Corpus files, the pipeline, and scoring
=======================================

"""

# The pipeline consumes and produces the PubTator exchange format: a
# title line, an abstract line, then one tab-separated annotation per
# mention with byte offsets into "title space abstract".
import pathlib

from varlex import (
    Annotator,
    Document,
    EvalMode,
    evaluate,
    load_genes,
    load_kb,
    read_pubtator,
    read_pubtator_text,
    write_pubtator,
)

DATA = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"

annotator = Annotator(
    kb=load_kb(str(DATA / "kb_braf.tsv")),
    lexicon=load_genes(str(DATA / "genes.txt")),
)

raw = """30009999|t|BRAF V600E in melanoma.
30009999|a|We confirmed c.1799T>A in 61 tumours; rs113488022 carriers relapsed early.

"""

docs = read_pubtator_text(raw)
annotated = annotator.annotate_all(docs)
print(write_pubtator(annotated))

# Reading a written corpus gives back the exact bytes, so files can make
# round trips through external tools without drift.
assert write_pubtator(read_pubtator_text(write_pubtator(annotated))) \
    == write_pubtator(annotated)

# Scoring compares a prediction corpus against a gold corpus with pooled
# counts.  Three match modes: same span, same span and label, and same
# normalized identifier per document.
gold = read_pubtator(str(DATA / "sample_corpus.txt"))
stripped = [Document(d.doc_id, d.title, d.abstract) for d in gold]
predicted = annotator.annotate_all(stripped)

for mode in EvalMode:
    r = evaluate(gold, predicted, mode)
    print(f"{mode.value:>4}: TP={r.tp} FP={r.fp} FN={r.fn} "
          f"P={r.precision:.4f} R={r.recall:.4f} F={r.f1:.4f}")

# The same operations are available from the command line:
#   varlex annotate corpus.txt --kb kb.tsv --genes genes.txt
#   varlex parse V600E
#   varlex evaluate gold.txt predictions.txt --mode id
