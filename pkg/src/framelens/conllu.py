"""CoNLL-U reading and dependency-tree validation.

Tokens keep the subset of UD columns the analysis layer needs: FORM, LEMMA,
UPOS, FEATS, HEAD and DEPREL. Multiword-token ranges (ids like "3-4") and
empty nodes (ids like "3.1") contribute to the sentence text but are not part
of the dependency tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ConlluError

UPOS_TAGS = frozenset(
    "ADJ ADP ADV AUX CCONJ DET INTJ NOUN NUM PART PRON PROPN PUNCT SCONJ SYM VERB X".split()
)

_MWT_ID = re.compile(r"^\d+-\d+$")
_EMPTY_ID = re.compile(r"^\d+\.\d+$")


@dataclass(frozen=True)
class Token:
    """One syntactic word of a sentence (1-based index, 0 = head of root)."""

    index: int
    form: str
    lemma: str
    upos: str
    feats: tuple[tuple[str, str], ...]
    head: int
    deprel: str

    def feat(self, name):
        for key, value in self.feats:
            if key == name:
                return value
        return None

    @property
    def base_deprel(self):
        """Deprel without its subtype, e.g. "aux:pass" -> "aux"."""
        return self.deprel.split(":", 1)[0]


@dataclass
class Sentence:
    """A dependency-parsed sentence; token indices are 1..n, heads form a tree."""

    sent_id: str
    text: str
    tokens: tuple[Token, ...]
    _children: dict = field(default=None, repr=False, compare=False)
    _depths: dict = field(default=None, repr=False, compare=False)

    def __len__(self):
        return len(self.tokens)

    def token(self, index):
        """Token by 1-based index."""
        return self.tokens[index - 1]

    @property
    def root_index(self):
        for tok in self.tokens:
            if tok.head == 0:
                return tok.index
        raise ConlluError(f"sentence {self.sent_id!r} has no root")

    def children(self, index):
        """1-based indices of the dependents of the given token, left to right."""
        if self._children is None:
            children = {tok.index: [] for tok in self.tokens}
            for tok in self.tokens:
                if tok.head != 0:
                    children[tok.head].append(tok.index)
            self._children = children
        return self._children[index]

    def depth(self, index):
        """Number of head links between the token and the tree root."""
        if self._depths is None:
            depths = {self.root_index: 0}
            stack = [self.root_index]
            while stack:
                node = stack.pop()
                for child in self.children(node):
                    depths[child] = depths[node] + 1
                    stack.append(child)
            self._depths = depths
        return self._depths[index]


def parse_feats(feats_field):
    """Parse a UD FEATS column ("A=b|C=d" or "_") into a sorted tuple of pairs.

    Feature order carries no meaning, so it is normalized for stable equality.
    """
    if feats_field in ("_", ""):
        return ()
    pairs = []
    for item in feats_field.split("|"):
        name, _, value = item.partition("=")
        if not name or not value:
            raise ValueError(f"malformed feature {item!r}")
        pairs.append((name, value))
    return tuple(sorted(pairs))


def validate_sentence(sentence, where=""):
    """Check the token-level and tree-level invariants; raise ConlluError if broken."""
    tokens = sentence.tokens
    n = len(tokens)
    ctx = f"{where}: " if where else ""
    if n == 0:
        raise ConlluError(f"{ctx}sentence {sentence.sent_id!r} has no tokens")
    roots = 0
    for pos, tok in enumerate(tokens, start=1):
        if tok.index != pos:
            raise ConlluError(
                f"{ctx}token ids not contiguous in {sentence.sent_id!r}: "
                f"expected {pos}, got {tok.index}"
            )
        if not 0 <= tok.head <= n:
            raise ConlluError(
                f"{ctx}head {tok.head} out of range at token {pos} in {sentence.sent_id!r}"
            )
        if tok.head == tok.index:
            raise ConlluError(
                f"{ctx}token {pos} in {sentence.sent_id!r} is its own head"
            )
        if tok.upos not in UPOS_TAGS:
            raise ConlluError(
                f"{ctx}unknown UPOS {tok.upos!r} at token {pos} in {sentence.sent_id!r}"
            )
        if (tok.head == 0) != (tok.deprel == "root"):
            raise ConlluError(
                f"{ctx}token {pos} in {sentence.sent_id!r}: deprel 'root' must "
                f"coincide with head 0 (got head={tok.head}, deprel={tok.deprel!r})"
            )
        if tok.head == 0:
            roots += 1
    if roots != 1:
        raise ConlluError(
            f"{ctx}sentence {sentence.sent_id!r} has {roots} roots, expected exactly 1"
        )
    # Every node must reach the root without revisiting a node.
    for tok in tokens:
        seen = set()
        node = tok.index
        while node != 0:
            if node in seen:
                raise ConlluError(
                    f"{ctx}cycle in dependency tree of {sentence.sent_id!r} "
                    f"involving token {node}"
                )
            seen.add(node)
            node = tokens[node - 1].head
    return sentence


def _reconstruct_text(rows):
    """Join surface forms, letting multiword-token ranges shadow their words."""
    covered_until = 0
    parts = []
    for tok_id, form, is_range, range_end in rows:
        if is_range:
            parts.append(form)
            covered_until = range_end
        elif tok_id > covered_until:
            parts.append(form)
    return " ".join(parts)


def parse_conllu(stream, source="<conllu>"):
    """Parse CoNLL-U text into a list of (doc_id, Sentence).

    `stream` is an iterable of lines or a string. Documents are delimited by
    `# newdoc id = ...` comments; sentences without one fall under "doc0".
    Raises ConlluError (naming the line number) on malformed input.
    """
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = [line.rstrip("\n") for line in stream]

    results = []
    seen_ids = {}  # doc_id -> set of sent_ids
    doc_id = "doc0"

    sent_id = None
    sent_text = None
    tokens = []
    text_rows = []  # (id, form, is_range, range_end) for text reconstruction
    first_line = None

    def flush(line_no):
        nonlocal sent_id, sent_text, tokens, text_rows, first_line
        if not tokens and sent_id is None:
            return
        if sent_id is None:
            raise ConlluError(f"{source}: missing '# sent_id' for sentence ending at line {line_no}")
        if not tokens:
            raise ConlluError(f"{source}: sentence {sent_id!r} at line {first_line} has no tokens")
        if sent_id in seen_ids.setdefault(doc_id, set()):
            raise ConlluError(
                f"{source}: duplicate sent_id {sent_id!r} in document {doc_id!r} at line {first_line}"
            )
        seen_ids[doc_id].add(sent_id)
        text = sent_text if sent_text is not None else _reconstruct_text(text_rows)
        sentence = Sentence(sent_id=sent_id, text=text, tokens=tuple(tokens))
        validate_sentence(sentence, where=f"{source}:{first_line}")
        results.append((doc_id, sentence))
        sent_id = None
        sent_text = None
        tokens = []
        text_rows = []
        first_line = None

    for line_no, line in enumerate(lines, start=1):
        if line == "":
            flush(line_no)
            continue
        if first_line is None:
            first_line = line_no
        if line.startswith("#"):
            body = line[1:].strip()
            key, _, value = body.partition("=")
            key = key.strip()
            value = value.strip()
            if key == "newdoc id":
                if tokens or sent_id is not None:
                    raise ConlluError(
                        f"{source}: '# newdoc id' inside a sentence at line {line_no}"
                    )
                doc_id = value
                first_line = None
            elif key == "sent_id":
                sent_id = value
            elif key == "text":
                sent_text = value
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluError(
                f"{source}: expected 10 columns at line {line_no}, got {len(cols)}"
            )
        tok_id, form = cols[0], cols[1]
        if _MWT_ID.match(tok_id):
            text_rows.append((int(tok_id.split("-")[0]), form, True, int(tok_id.split("-")[1])))
            continue
        if _EMPTY_ID.match(tok_id):
            continue
        try:
            index = int(tok_id)
        except ValueError:
            raise ConlluError(f"{source}: non-integer token id {tok_id!r} at line {line_no}")
        try:
            head = int(cols[6])
        except ValueError:
            raise ConlluError(f"{source}: non-integer head {cols[6]!r} at line {line_no}")
        try:
            feats = parse_feats(cols[5])
        except ValueError as exc:
            raise ConlluError(f"{source}: {exc} at line {line_no}")
        tokens.append(
            Token(
                index=index,
                form=form,
                lemma=cols[2],
                upos=cols[3],
                feats=feats,
                head=head,
                deprel=cols[7],
            )
        )
        text_rows.append((index, form, False, index))

    flush(len(lines) + 1)
    return results


def sentence_to_record(sentence):
    """JSON-ready dict for a Sentence (the persisted index representation)."""
    return {
        "sent_id": sentence.sent_id,
        "text": sentence.text,
        "tokens": [
            {
                "index": tok.index,
                "form": tok.form,
                "lemma": tok.lemma,
                "upos": tok.upos,
                "feats": {k: v for k, v in tok.feats},
                "head": tok.head,
                "deprel": tok.deprel,
            }
            for tok in sentence.tokens
        ],
    }


def sentence_from_record(record, where=""):
    """Inverse of sentence_to_record, with full validation."""
    try:
        tokens = tuple(
            Token(
                index=int(t["index"]),
                form=t["form"],
                lemma=t.get("lemma", "_"),
                upos=t["upos"],
                feats=tuple(sorted((str(k), str(v)) for k, v in t.get("feats", {}).items())),
                head=int(t["head"]),
                deprel=t["deprel"],
            )
            for t in record["tokens"]
        )
        sentence = Sentence(
            sent_id=record["sent_id"],
            text=record.get("text", ""),
            tokens=tokens,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConlluError(f"{where}: malformed sentence record ({exc})")
    return validate_sentence(sentence, where=where)
