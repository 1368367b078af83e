"""Recursive descent parser for AtomScript.

Grammar outline (all binary levels are left-associative, loosest first):

    program        : line* EOF
    line           : statement | ifBlock | listenerBlock
    statement      : (assignment | functionCall) ';'
    ifBlock        : 'if' expression block ('else' (block | ifBlock))?
    listenerBlock  : 'forever' block
                   | 'onStart' block
                   | 'onCollision' '<' constant ',' constant '>' block
                   | 'onButtonPress' '<' constant '>' block
    block          : '{' line* '}'
    expression     : boolExpr
    boolExpr       : compareExpr (('&&' | '||') compareExpr)*
    compareExpr    : addExpr (('==' | '!=' | '<' | '>' | '<=' | '>=') addExpr)*
    addExpr        : multExpr (('+' | '-') multExpr)*
    multExpr       : unary (('*' | '/') unary)*
    unary          : '!' unary | primary
    primary        : constant | IDENTIFIER | array | functionCall
                   | '(' expression ')'

There is no unary minus; negative values are spelled as expressions such
as `0 - x`.

On a syntax error the parser records a diagnostic and recovers to the next
plausible top-level boundary so that several errors can be reported from a
single run.
"""

from __future__ import annotations

from dataclasses import dataclass

from atomxr.diagnostics import ERROR, Diagnostic, Span
from atomxr.lang import nodes
from atomxr.lang.tokens import Token, TokenKind, tokenize


class AtomScriptSyntaxError(Exception):
    """Raised by parse_program when the source does not parse."""

    def __init__(self, diagnostics: list[Diagnostic]):
        super().__init__("; ".join(str(d) for d in diagnostics))
        self.diagnostics = diagnostics


@dataclass
class ParseResult:
    program: nodes.Program | None
    diagnostics: list[Diagnostic]

    @property
    def ok(self) -> bool:
        return self.program is not None


class _ParseError(Exception):
    def __init__(self, diagnostic: Diagnostic):
        self.diagnostic = diagnostic


class _Parser:
    def __init__(self, tokens: list[Token], source_len: int):
        # Comments carry no syntactic weight; they are dropped from the AST.
        self.tokens = [t for t in tokens if t.kind is not TokenKind.COMMENT]
        self.pos = 0
        self.end = source_len
        self.diagnostics: list[Diagnostic] = []

    # -- token helpers -----------------------------------------------------

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def here(self) -> Span:
        tok = self.peek()
        return tok.span if tok else Span(self.end, self.end)

    def error(self, message: str, span: Span | None = None) -> _ParseError:
        return _ParseError(Diagnostic(ERROR, "syntax-error", message, span or self.here()))

    def check(self, kind: TokenKind, lexeme: str | None = None) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind is kind and (lexeme is None or tok.lexeme == lexeme)

    def match(self, kind: TokenKind, lexeme: str | None = None) -> Token | None:
        if self.check(kind, lexeme):
            return self.advance()
        return None

    def expect(self, kind: TokenKind, lexeme: str, what: str) -> Token:
        tok = self.match(kind, lexeme)
        if tok is None:
            found = repr(self.peek().lexeme) if self.peek() else "end of input"
            raise self.error(f"expected {what} but found {found}")
        return tok

    # -- grammar -----------------------------------------------------------

    def parse_program(self) -> nodes.Program:
        lines: list = []
        while not self.at_end():
            start = self.pos
            try:
                lines.append(self.parse_line())
            except _ParseError as exc:
                self.diagnostics.append(exc.diagnostic)
                self.recover(start)
        return nodes.Program(tuple(lines))

    def recover(self, start: int) -> None:
        """Skip to the next top-level boundary: past a ';' or a balanced '}'."""
        if self.pos == start and not self.at_end():
            self.pos += 1
        depth = 0
        while not self.at_end():
            tok = self.advance()
            if tok.kind is TokenKind.PUNCTUATION:
                if tok.lexeme == "{":
                    depth += 1
                elif tok.lexeme == "}":
                    depth -= 1
                    if depth <= 0:
                        return
                elif tok.lexeme == ";" and depth == 0:
                    return

    def parse_line(self):
        tok = self.peek()
        assert tok is not None
        if tok.kind is TokenKind.KEYWORD:
            if tok.lexeme == "if":
                return self.parse_if()
            if tok.lexeme in (nodes.FOREVER, nodes.ON_START):
                self.advance()
                body = self.parse_block()
                return nodes.ListenerBlock(tok.lexeme, (), body, span=tok.span)
            if tok.lexeme == nodes.ON_COLLISION:
                self.advance()
                self.expect(TokenKind.OPERATOR, "<", "'<'")
                first = self.parse_constant()
                self.expect(TokenKind.PUNCTUATION, ",", "','")
                second = self.parse_constant()
                self.expect(TokenKind.OPERATOR, ">", "'>'")
                body = self.parse_block()
                return nodes.ListenerBlock(nodes.ON_COLLISION, (first, second), body, span=tok.span)
            if tok.lexeme == nodes.ON_BUTTON_PRESS:
                self.advance()
                self.expect(TokenKind.OPERATOR, "<", "'<'")
                arg = self.parse_constant()
                self.expect(TokenKind.OPERATOR, ">", "'>'")
                body = self.parse_block()
                return nodes.ListenerBlock(nodes.ON_BUTTON_PRESS, (arg,), body, span=tok.span)
            raise self.error(f"unexpected keyword {tok.lexeme!r}")
        if tok.kind is TokenKind.IDENTIFIER:
            return self.parse_statement()
        raise self.error(f"expected a statement or block but found {tok.lexeme!r}")

    def parse_statement(self):
        name = self.advance()  # caller guaranteed IDENTIFIER
        if self.check(TokenKind.OPERATOR, "="):
            self.advance()
            value = self.parse_expression()
            self.expect(TokenKind.PUNCTUATION, ";", "';'")
            return nodes.Assignment(name.lexeme, value, span=name.span)
        if self.check(TokenKind.PUNCTUATION, "("):
            call = self.parse_call_args(name)
            self.expect(TokenKind.PUNCTUATION, ";", "';'")
            return call
        raise self.error(f"expected '=' or '(' after {name.lexeme!r}")

    def parse_if(self) -> nodes.IfBlock:
        kw = self.advance()
        condition = self.parse_expression()
        body = self.parse_block()
        else_branch = None
        if self.match(TokenKind.KEYWORD, "else"):
            if self.check(TokenKind.KEYWORD, "if"):
                else_branch = self.parse_if()
            else:
                else_branch = self.parse_block()
        return nodes.IfBlock(condition, body, else_branch, span=kw.span)

    def parse_block(self) -> tuple:
        self.expect(TokenKind.PUNCTUATION, "{", "'{'")
        lines: list = []
        while not self.check(TokenKind.PUNCTUATION, "}"):
            if self.at_end():
                raise self.error("expected '}' but found end of input")
            lines.append(self.parse_line())
        self.advance()
        return tuple(lines)

    def parse_call_args(self, name: Token) -> nodes.FunctionCall:
        open_paren = self.expect(TokenKind.PUNCTUATION, "(", "'('")
        args: list = []
        if not self.check(TokenKind.PUNCTUATION, ")"):
            args.append(self.parse_expression())
            while self.match(TokenKind.PUNCTUATION, ","):
                args.append(self.parse_expression())
        close = self.expect(TokenKind.PUNCTUATION, ")", "')'")
        return nodes.FunctionCall(name.lexeme, tuple(args),
                                  span=Span(name.span.start, close.span.end))

    def parse_constant(self) -> nodes.Constant:
        tok = self.peek()
        if tok is None:
            raise self.error("expected a constant but found end of input")
        if tok.kind is TokenKind.INTEGER:
            self.advance()
            return nodes.Constant(nodes.INT, int(tok.lexeme), span=tok.span)
        if tok.kind is TokenKind.FLOAT:
            self.advance()
            return nodes.Constant(nodes.FLOAT, float(tok.lexeme), span=tok.span)
        if tok.kind is TokenKind.STRING:
            self.advance()
            return nodes.Constant(nodes.STRING, tok.text, span=tok.span)
        if tok.kind is TokenKind.BOOL:
            self.advance()
            return nodes.Constant(nodes.BOOL, tok.lexeme == "true", span=tok.span)
        if tok.kind is TokenKind.NULL:
            self.advance()
            return nodes.Constant(nodes.NULL, None, span=tok.span)
        raise self.error(f"expected a constant but found {tok.lexeme!r}")

    # Expression levels, loosest binding first.

    def parse_expression(self):
        return self.parse_binary(0)

    _LEVELS = (nodes.BOOL_OPS, nodes.COMPARE_OPS, nodes.ADD_OPS, nodes.MULT_OPS)

    def parse_binary(self, level: int):
        if level >= len(self._LEVELS):
            return self.parse_unary()
        ops = self._LEVELS[level]
        left = self.parse_binary(level + 1)
        while True:
            tok = self.peek()
            if tok is None or tok.kind is not TokenKind.OPERATOR or tok.lexeme not in ops:
                return left
            self.advance()
            right = self.parse_binary(level + 1)
            left = nodes.Binary(tok.lexeme, left, right, span=tok.span)

    def parse_unary(self):
        tok = self.peek()
        if tok is not None and tok.kind is TokenKind.OPERATOR and tok.lexeme == "!":
            self.advance()
            operand = self.parse_unary()
            return nodes.Not(operand, span=tok.span)
        return self.parse_primary()

    def parse_primary(self):
        tok = self.peek()
        if tok is None:
            raise self.error("expected an expression but found end of input")
        if tok.kind in (TokenKind.INTEGER, TokenKind.FLOAT, TokenKind.STRING,
                        TokenKind.BOOL, TokenKind.NULL):
            return self.parse_constant()
        if tok.kind is TokenKind.IDENTIFIER:
            self.advance()
            if self.check(TokenKind.PUNCTUATION, "("):
                return self.parse_call_args(tok)
            return nodes.Identifier(tok.lexeme, span=tok.span)
        if tok.kind is TokenKind.PUNCTUATION and tok.lexeme == "(":
            self.advance()
            inner = self.parse_expression()
            close = self.expect(TokenKind.PUNCTUATION, ")", "')'")
            return nodes.Paren(inner, span=Span(tok.span.start, close.span.end))
        if tok.kind is TokenKind.PUNCTUATION and tok.lexeme == "[":
            self.advance()
            items: list = []
            if not self.check(TokenKind.PUNCTUATION, "]"):
                items.append(self.parse_expression())
                while self.match(TokenKind.PUNCTUATION, ","):
                    items.append(self.parse_expression())
            close = self.expect(TokenKind.PUNCTUATION, "]", "']'")
            return nodes.ArrayLiteral(tuple(items), span=Span(tok.span.start, close.span.end))
        raise self.error(f"expected an expression but found {tok.lexeme!r}")


def parse(source: str) -> ParseResult:
    """Parse AtomScript source into a Program.

    Returns the program plus an empty diagnostic list on success, or a
    None program with at least one error diagnostic on failure.
    """
    tokens, lex_diagnostics = tokenize(source)
    parser = _Parser(tokens, len(source.encode("utf-8")))
    program = parser.parse_program()
    diagnostics = lex_diagnostics + parser.diagnostics
    if diagnostics:
        return ParseResult(None, diagnostics)
    return ParseResult(program, [])


def parse_program(source: str) -> nodes.Program:
    """Parse, raising AtomScriptSyntaxError on any diagnostic."""
    result = parse(source)
    if result.program is None:
        raise AtomScriptSyntaxError(result.diagnostics)
    return result.program
