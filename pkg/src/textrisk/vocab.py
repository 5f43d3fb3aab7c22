"""Vocabulary construction and half-overlapping word-block segmentation."""

import hashlib
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from textrisk.errors import DataError

PAD_TOKEN = "xxpadxx"
UNK_TOKEN = "xxunkxx"
NUMBER_TOKEN = "xxnumberxx"
ENTITY_TOKEN = "xxentityxx"
SEP_TOKEN = "xxsepxx"

SPECIAL_TOKENS = (PAD_TOKEN, UNK_TOKEN, NUMBER_TOKEN, ENTITY_TOKEN, SEP_TOKEN)
PAD_ID = 0
UNK_ID = 1

_VOCAB_FORMAT_VERSION = 1


@dataclass(frozen=True)
class Vocabulary:
    """Bijective token<->id map with PAD fixed at id 0.

    ``counts`` holds corpus frequencies (zero for PAD/UNK/SEP unless they
    occur literally); the embedding trainer uses them for subsampling and
    noise draws.
    """

    tokens: tuple
    index: dict
    counts: tuple
    min_count: int

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self.index

    def id_of(self, token: str) -> int:
        return self.index.get(token, UNK_ID)

    def token_of(self, token_id: int) -> str:
        return self.tokens[token_id]

    def encode(self, tokens: Sequence[str]) -> np.ndarray:
        return np.fromiter(
            (self.index.get(t, UNK_ID) for t in tokens), dtype=np.int32,
            count=len(tokens),
        )

    def to_json(self) -> str:
        doc = {
            "format_version": _VOCAB_FORMAT_VERSION,
            "min_count": self.min_count,
            "specials": list(SPECIAL_TOKENS),
            "tokens": list(self.tokens[len(SPECIAL_TOKENS):]),
            "counts": list(self.counts),
        }
        return json.dumps(doc, ensure_ascii=False, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Vocabulary":
        doc = json.loads(text)
        if doc.get("format_version") != _VOCAB_FORMAT_VERSION:
            raise DataError(
                f"unsupported vocabulary format_version: {doc.get('format_version')!r}"
            )
        if tuple(doc["specials"]) != SPECIAL_TOKENS:
            raise DataError("vocabulary special-token list does not match")
        tokens = SPECIAL_TOKENS + tuple(doc["tokens"])
        counts = tuple(doc["counts"])
        if len(counts) != len(tokens):
            raise DataError("vocabulary counts length does not match token list")
        index = {t: i for i, t in enumerate(tokens)}
        return cls(tokens=tokens, index=index, counts=counts,
                   min_count=doc["min_count"])

    def content_hash(self) -> str:
        return hashlib.sha256(self.to_json().encode("utf-8")).hexdigest()


def build_vocab(corpus: Iterable[Sequence[str]], min_count: int = 25) -> Vocabulary:
    """Count tokens across the corpus and keep those seen >= ``min_count`` times.

    Ids are assigned by descending frequency with lexicographic tie-break,
    after the reserved specials.
    """
    counts: dict = {}
    n_docs = 0
    for tokens in corpus:
        n_docs += 1
        for tok in tokens:
            counts[tok] = counts.get(tok, 0) + 1
    if n_docs == 0:
        raise DataError("cannot build a vocabulary from an empty corpus")
    special_counts = [counts.pop(tok, 0) for tok in SPECIAL_TOKENS]
    kept = sorted(
        (tok for tok, c in counts.items() if c >= min_count),
        key=lambda tok: (-counts[tok], tok),
    )
    tokens = SPECIAL_TOKENS + tuple(kept)
    index = {t: i for i, t in enumerate(tokens)}
    all_counts = tuple(special_counts) + tuple(counts[t] for t in kept)
    return Vocabulary(tokens=tokens, index=index, counts=all_counts,
                      min_count=min_count)


@dataclass(frozen=True)
class TokenizedDoc:
    """A single text segment as vocabulary ids."""

    ids: np.ndarray
    segment: str  # auditor | management | concatenated

    def __post_init__(self):
        if self.ids.ndim != 1:
            raise DataError("token ids must be one-dimensional")


@dataclass(frozen=True)
class BlockSequence:
    """Half-overlapping blocks of ``k`` token ids with a validity mask.

    Consecutive blocks overlap by exactly ``k // 2`` positions; the final
    partial block is PAD-padded with its mask cleared.
    """

    ids: np.ndarray        # (T, k) int32
    token_mask: np.ndarray  # (T, k) bool, True on real tokens
    k: int
    empty: bool

    @property
    def n_blocks(self) -> int:
        return self.ids.shape[0]


def blockify(doc_ids: np.ndarray, k: int) -> BlockSequence:
    """Split a token-id sequence into half-overlapping blocks of size ``k``."""
    if k < 2 or k % 2 != 0:
        raise ValueError(f"block size must be an even integer >= 2, got {k}")
    ids = np.asarray(doc_ids, dtype=np.int32)
    n = ids.shape[0]
    step = k // 2
    if n == 0:
        return BlockSequence(
            ids=np.zeros((1, k), dtype=np.int32),
            token_mask=np.zeros((1, k), dtype=bool),
            k=k,
            empty=True,
        )
    n_blocks = 1 if n <= k else math.ceil((n - k) / step) + 1
    blocks = np.zeros((n_blocks, k), dtype=np.int32)
    mask = np.zeros((n_blocks, k), dtype=bool)
    for t in range(n_blocks):
        start = t * step
        chunk = ids[start:start + k]
        blocks[t, : chunk.shape[0]] = chunk
        mask[t, : chunk.shape[0]] = True
    return BlockSequence(ids=blocks, token_mask=mask, k=k, empty=False)
