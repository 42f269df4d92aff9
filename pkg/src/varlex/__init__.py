"""Rule-based recognition, normalization, and grouping of genomic variant
mentions in biomedical text."""

from .corpus import (
    Annotation,
    Document,
    read_pubtator,
    read_pubtator_text,
    write_pubtator,
)
from .errors import (
    DuplicateKey,
    FileUnreadable,
    MalformedLine,
    MalformedRow,
    NoSeparator,
    OffsetMismatch,
    ParseFailure,
    UnknownResidue,
    VarlexError,
)
from .evaluation import EvalMode, EvalReport, evaluate
from .grouping import VariantGroup, group_mentions, is_prefix_compatible, propagated_ids
from .hgvs import (
    ComponentRole,
    EditKind,
    MentionType,
    RegionDescriptor,
    RegionKind,
    SequenceLevel,
    VariantDescriptor,
    canonical_string,
    classify_descriptor,
    classify_surface,
    normalize_amino_acid,
    normalize_arrow,
    parse_descriptor,
    parse_identifier,
    region_string,
)
from .kb import KnowledgeBase, VariantRecord, load_genes, load_kb
from .normalizer import (
    DEFAULT_POLICY,
    UNNORMALIZED,
    IdKind,
    NormalizationPolicy,
    NormalizedId,
    candidate_records,
    normalize,
    parse_rendered,
    resolve_gene_context,
)
from .pipeline import Annotator
from .recognizer import GeneMention, Mention, Recognizer, split_gene_fused
from .tokenizer import Token, TokenKind, split_sentences, tokenize

__version__ = "0.1.0"

__all__ = [
    "Annotation",
    "Annotator",
    "ComponentRole",
    "DEFAULT_POLICY",
    "Document",
    "DuplicateKey",
    "EditKind",
    "EvalMode",
    "EvalReport",
    "FileUnreadable",
    "GeneMention",
    "IdKind",
    "UNNORMALIZED",
    "KnowledgeBase",
    "MalformedLine",
    "MalformedRow",
    "Mention",
    "MentionType",
    "NoSeparator",
    "NormalizationPolicy",
    "NormalizedId",
    "OffsetMismatch",
    "ParseFailure",
    "Recognizer",
    "RegionDescriptor",
    "RegionKind",
    "SequenceLevel",
    "Token",
    "TokenKind",
    "UnknownResidue",
    "VariantDescriptor",
    "VariantGroup",
    "VariantRecord",
    "VarlexError",
    "canonical_string",
    "classify_descriptor",
    "classify_surface",
    "evaluate",
    "group_mentions",
    "is_prefix_compatible",
    "load_genes",
    "load_kb",
    "candidate_records",
    "normalize",
    "parse_rendered",
    "normalize_amino_acid",
    "normalize_arrow",
    "parse_descriptor",
    "parse_identifier",
    "propagated_ids",
    "read_pubtator",
    "read_pubtator_text",
    "region_string",
    "resolve_gene_context",
    "split_gene_fused",
    "split_sentences",
    "tokenize",
    "write_pubtator",
]
