"""Report-text preprocessing: normalization, stemming, and scrubbing.

The document chain is: detect entity candidates from the raw casing, then
normalize (lowercase, strip punctuation), stem alphabetic tokens, and scrub
(entity and number replacement, stopword removal).  Stopword and entity
dictionaries are matched against both their raw and stemmed forms so the
stem-first ordering cannot silently miss them.
"""

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Iterable, Sequence

from textrisk import stemmer as _stemmer_mod
from textrisk.stemmer import Stemmer

NUMBER_TOKEN = "xxnumberxx"
ENTITY_TOKEN = "xxentityxx"

_DIGIT_RE = re.compile(r"\d")
_RAW_TOKEN_RE = re.compile(r"\S+")
_SENTENCE_END = (".", "!", "?")


def normalize(text: str) -> str:
    """Lowercase and replace punctuation, newlines and tabs by single spaces."""
    chars = [c if c.isalnum() else " " for c in text.lower()]
    return " ".join("".join(chars).split())


def load_stopwords(path) -> frozenset:
    """Read a one-token-per-line stopword file."""
    with open(path, encoding="utf-8") as fh:
        return frozenset(line.strip() for line in fh if line.strip())


def default_stopwords(language: str = "da") -> frozenset:
    """Bundled stopword list; ``language`` is ``"da"`` or ``"en"``."""
    name = f"stopwords_{language}.txt"
    ref = resources.files("textrisk.data").joinpath(name)
    try:
        text = ref.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ValueError(f"no bundled stopword list for language {language!r}")
    return frozenset(line.strip() for line in text.splitlines() if line.strip())


def detect_entities(raw_text: str) -> frozenset:
    """Capitalization-history heuristic for name-like tokens.

    A token form counts as an entity when every occurrence in the document
    is capitalized and at least one occurrence sits mid-sentence, i.e. its
    capitalization cannot be explained by sentence position.
    """
    cap_mid = set()
    lowercase_seen = set()
    prev_end = None  # last char of the previous raw token
    for match in _RAW_TOKEN_RE.finditer(raw_text):
        raw = match.group().strip("\"'()[]{}«»,;:.!?")
        prev = prev_end
        prev_end = match.group()[-1]
        if not raw or not raw[0].isalpha():
            continue
        form = raw.lower()
        if not form.isalpha() or len(form) < 2:
            continue
        if raw[0].isupper():
            sentence_initial = prev is None or prev in _SENTENCE_END
            if not sentence_initial:
                cap_mid.add(form)
        else:
            lowercase_seen.add(form)
    return frozenset(cap_mid - lowercase_seen)


@dataclass(frozen=True)
class PreprocessedText:
    """Scrubbed token stream plus the alignment back into the raw stream.

    ``origin`` maps each surviving token to its index in ``normalized``,
    which reporting uses to interleave dropped tokens at zero intensity.
    """

    tokens: tuple
    origin: tuple
    normalized: tuple


class TextPipeline:
    """Configured normalize -> stem -> scrub chain for one corpus."""

    def __init__(
        self,
        stopwords: Iterable[str] = (),
        entity_dictionary: Iterable[str] = (),
        stemmer: Stemmer = _stemmer_mod.stem,
        use_capitalization_heuristic: bool = True,
    ):
        self.stemmer = stemmer
        self.stopwords = frozenset(stopwords)
        self.entity_dictionary = frozenset(w.lower() for w in entity_dictionary)
        self.use_capitalization_heuristic = use_capitalization_heuristic
        self._stop_forms = self._with_stems(self.stopwords)
        self._entity_forms = self._with_stems(self.entity_dictionary)

    def _with_stems(self, words: frozenset) -> frozenset:
        forms = set(words)
        forms.update(self.stemmer(w) for w in words if w.isalpha())
        return frozenset(forms)

    def stem_token(self, token: str) -> str:
        return self.stemmer(token) if token.isalpha() else token

    def scrub(self, tokens: Sequence[str], extra_entities: Iterable[str] = ()) -> list:
        """Replace entities and numbers, drop stopwords; order-preserving."""
        extra = self._with_stems(frozenset(extra_entities))
        out = []
        for tok in tokens:
            if tok in self._entity_forms or tok in extra:
                out.append(ENTITY_TOKEN)
            elif _DIGIT_RE.search(tok):
                out.append(NUMBER_TOKEN)
            elif tok in self._stop_forms:
                continue
            else:
                out.append(tok)
        return out

    def process(self, raw_text: str) -> PreprocessedText:
        """Full chain from raw text to the scrubbed, aligned token stream."""
        entities = (
            detect_entities(raw_text)
            if self.use_capitalization_heuristic
            else frozenset()
        )
        normalized = normalize(raw_text).split()
        stemmed = [self.stem_token(t) for t in normalized]
        extra = self._with_stems(entities)
        tokens = []
        origin = []
        for i, tok in enumerate(stemmed):
            if tok in self._entity_forms or tok in extra:
                tokens.append(ENTITY_TOKEN)
            elif _DIGIT_RE.search(tok):
                tokens.append(NUMBER_TOKEN)
            elif tok in self._stop_forms:
                continue
            else:
                tokens.append(tok)
            origin.append(i)
        return PreprocessedText(
            tokens=tuple(tokens), origin=tuple(origin), normalized=tuple(normalized)
        )

    def tokens(self, raw_text: str) -> list:
        return list(self.process(raw_text).tokens)
