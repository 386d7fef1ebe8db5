"""Balanced encoding of q-ary words using a rank-code prefix.

An information word x of length k over the alphabet {0, ..., q-1} is mapped
to a codeword u | g | y whose symbol sum equals n(q-1)/2: y is x shifted by
one of kq candidate offset words, g is a rank-code prefix recording which
offset was used, and u is a single filler symbol absorbing the remainder.
Decoding is exact and needs no lookup tables.
"""

from qbalance._core import (
    DataError,
    Error,
    NotBalanced,
    ParameterError,
    Params,
    PrefixOutOfSubset,
    __version__,
    balance_candidates,
    balanced_cardinality_approx,
    balancing_sequence,
    compare_csv,
    decode,
    decode_trace,
    encode,
    encoding_table_tsv,
    gray_decode,
    gray_encode,
    gray_rank,
    gray_table_tsv,
    gray_unrank,
    make_params,
    scheme_kmax,
    select_subset,
    walk_csv,
)

__all__ = [
    "DataError",
    "Error",
    "NotBalanced",
    "ParameterError",
    "Params",
    "PrefixOutOfSubset",
    "__version__",
    "balance_candidates",
    "balanced_cardinality_approx",
    "balancing_sequence",
    "compare_csv",
    "decode",
    "decode_trace",
    "encode",
    "encoding_table_tsv",
    "gray_decode",
    "gray_encode",
    "gray_rank",
    "gray_table_tsv",
    "gray_unrank",
    "make_params",
    "scheme_kmax",
    "select_subset",
    "walk_csv",
]
