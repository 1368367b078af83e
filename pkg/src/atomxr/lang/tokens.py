"""AtomScript tokenizer.

Scans the UTF-8 encoding of the source so token spans are byte offsets.
Strings have no escape sequences: a quoted literal simply runs to the next
matching quote (and may span lines).  Multibyte UTF-8 sequences can only
occur inside strings and comments, where they are passed through opaquely;
everywhere else a non-ASCII byte is an illegal character.

The tokenizer is total: any input yields a token list plus diagnostics,
never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from atomxr.diagnostics import ERROR, Diagnostic, Span


class TokenKind(str, Enum):
    KEYWORD = "keyword"
    IDENTIFIER = "identifier"
    INTEGER = "integer"
    FLOAT = "float"
    STRING = "string"
    BOOL = "bool"
    NULL = "null"
    OPERATOR = "operator"
    PUNCTUATION = "punctuation"
    COMMENT = "comment"


KEYWORDS = {"forever", "onStart", "onCollision", "onButtonPress", "if", "else"}

OPERATOR_CHARS = set("=!<>+-*/&|")
PUNCTUATION_CHARS = set("{}()[],;")

_TWO_CHAR_OPS = {"==", "!=", "<=", ">=", "&&", "||"}
_ONE_CHAR_OPS = set("=!<>+-*/")


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    span: Span

    @property
    def text(self) -> str:
        """Payload text: string content without quotes, otherwise the lexeme."""
        if self.kind is TokenKind.STRING:
            return self.lexeme[1:-1]
        return self.lexeme


def _is_ident_start(b: int) -> bool:
    return 0x41 <= b <= 0x5A or 0x61 <= b <= 0x7A or b == 0x5F


def _is_ident_rest(b: int) -> bool:
    return _is_ident_start(b) or 0x30 <= b <= 0x39


def _is_digit(b: int) -> bool:
    return 0x30 <= b <= 0x39


def tokenize(source: str) -> tuple[list[Token], list[Diagnostic]]:
    """Tokenize AtomScript source.  Whitespace is skipped; comments become
    COMMENT tokens that downstream consumers may drop."""
    data = source.encode("utf-8")
    n = len(data)
    tokens: list[Token] = []
    diagnostics: list[Diagnostic] = []
    i = 0

    def text_at(start: int, end: int) -> str:
        return data[start:end].decode("utf-8", errors="replace")

    while i < n:
        b = data[i]

        if b in (0x20, 0x09, 0x0D, 0x0A):  # space, tab, CR, LF
            i += 1
            continue

        start = i

        if b == 0x2F and i + 1 < n:  # '/'
            nxt = data[i + 1]
            if nxt == 0x2F:  # line comment
                i += 2
                while i < n and data[i] not in (0x0A, 0x0D):
                    i += 1
                tokens.append(Token(TokenKind.COMMENT, text_at(start, i), Span(start, i)))
                continue
            if nxt == 0x2A:  # block comment
                i += 2
                closed = False
                while i < n:
                    if data[i] == 0x2A and i + 1 < n and data[i + 1] == 0x2F:
                        i += 2
                        closed = True
                        break
                    i += 1
                if not closed:
                    diagnostics.append(
                        Diagnostic(ERROR, "unterminated-comment",
                                   "block comment is never closed", Span(start, n))
                    )
                    i = n
                else:
                    tokens.append(Token(TokenKind.COMMENT, text_at(start, i), Span(start, i)))
                continue

        if b in (0x22, 0x27):  # '"' or "'"
            quote = b
            i += 1
            while i < n and data[i] != quote:
                i += 1
            if i >= n:
                diagnostics.append(
                    Diagnostic(ERROR, "unterminated-string",
                               "string literal is never closed", Span(start, n))
                )
                i = n
            else:
                i += 1
                tokens.append(Token(TokenKind.STRING, text_at(start, i), Span(start, i)))
            continue

        if _is_digit(b):
            while i < n and _is_digit(data[i]):
                i += 1
            # FLOAT requires digits on both sides of the dot.
            if i + 1 < n and data[i] == 0x2E and _is_digit(data[i + 1]):
                i += 1
                while i < n and _is_digit(data[i]):
                    i += 1
                tokens.append(Token(TokenKind.FLOAT, text_at(start, i), Span(start, i)))
            else:
                tokens.append(Token(TokenKind.INTEGER, text_at(start, i), Span(start, i)))
            continue

        if _is_ident_start(b):
            while i < n and _is_ident_rest(data[i]):
                i += 1
            word = text_at(start, i)
            if word in KEYWORDS:
                kind = TokenKind.KEYWORD
            elif word in ("true", "false"):
                kind = TokenKind.BOOL
            elif word == "null":
                kind = TokenKind.NULL
            else:
                kind = TokenKind.IDENTIFIER
            tokens.append(Token(kind, word, Span(start, i)))
            continue

        ch = chr(b) if b < 0x80 else None

        if ch is not None and ch in PUNCTUATION_CHARS:
            i += 1
            tokens.append(Token(TokenKind.PUNCTUATION, ch, Span(start, i)))
            continue

        if ch is not None and ch in OPERATOR_CHARS:
            two = data[i:i + 2].decode("ascii", errors="replace")
            if two in _TWO_CHAR_OPS:
                i += 2
                tokens.append(Token(TokenKind.OPERATOR, two, Span(start, i)))
                continue
            if ch in _ONE_CHAR_OPS:
                i += 1
                tokens.append(Token(TokenKind.OPERATOR, ch, Span(start, i)))
                continue
            # lone '&' or '|'
            i += 1
            diagnostics.append(
                Diagnostic(ERROR, "illegal-character",
                           f"unexpected character {ch!r}", Span(start, i))
            )
            continue

        # Illegal byte.  Consume a whole UTF-8 sequence so the span and the
        # reported character are intelligible.
        if b < 0x80:
            i += 1
        else:
            i += 1
            while i < n and 0x80 <= data[i] < 0xC0:
                i += 1
        diagnostics.append(
            Diagnostic(ERROR, "illegal-character",
                       f"unexpected character {text_at(start, i)!r}", Span(start, i))
        )

    return tokens, diagnostics
