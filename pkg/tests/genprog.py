"""Grammar-driven random AtomScript generator for round-trip fuzzing.

Emits source text straight from the grammar productions with randomized
formatting (spacing, quote styles, comments), so the parser and printer
get exercised on shapes no hand-written corpus would cover.
"""

from __future__ import annotations

import random
import string

RESERVED = {"forever", "onStart", "onCollision", "onButtonPress",
            "if", "else", "true", "false", "null"}

_IDENT_START = string.ascii_lowercase + "_"
_IDENT_REST = string.ascii_lowercase + string.digits + "_"
_STRING_CHARS = string.ascii_letters + string.digits + " .,:!?-+*/(){}[]<>=&|\t"
_WORDLIKE = set(string.ascii_letters + string.digits + "_")
_OPCHARS = set("=!<>+-*/&|")


class ProgramGenerator:
    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    # -- token assembly ------------------------------------------------------

    def render(self, tokens: list[str]) -> str:
        rng = self.rng
        out: list[str] = []
        previous = ""
        for token in tokens:
            if out:
                need_space = (
                    (previous[-1] in _WORDLIKE and token[0] in _WORDLIKE)
                    or (previous[-1] in _OPCHARS and token[0] in _OPCHARS)
                )
                if need_space:
                    out.append(rng.choice([" ", "  ", "\n", "\t "]))
                else:
                    out.append(rng.choice(["", " ", " ", "\n", "\t"]))
            out.append(token)
            previous = token
        if rng.random() < 0.3:
            out.append(rng.choice(["\n", " ", "\n\n"]))
        return "".join(out)

    def program(self) -> str:
        tokens: list[str] = []
        for _ in range(self.rng.randint(0, 5)):
            if self.rng.random() < 0.15:
                tokens.append(self.comment())
            tokens.extend(self.line(0))
        return self.render(tokens)

    def comment(self) -> str:
        if self.rng.random() < 0.5:
            return "// " + "".join(self.rng.choices(string.ascii_letters + " ", k=8)) + "\n"
        return "/* " + "".join(self.rng.choices(string.ascii_letters + " ", k=8)) + " */"

    # -- productions ---------------------------------------------------------

    def line(self, depth: int) -> list[str]:
        rng = self.rng
        roll = rng.random()
        if depth >= 3 or roll < 0.55:
            return self.statement(depth)
        if roll < 0.75:
            return self.if_block(depth)
        return self.listener(depth)

    def statement(self, depth: int) -> list[str]:
        if self.rng.random() < 0.6:
            return [self.identifier(), "="] + self.expression(depth + 1) + [";"]
        return self.call(depth) + [";"]

    def if_block(self, depth: int) -> list[str]:
        tokens = ["if"] + self.expression(depth + 1) + self.block(depth + 1)
        if self.rng.random() < 0.4:
            tokens.append("else")
            if self.rng.random() < 0.5 and depth < 2:
                tokens += self.if_block(depth + 1)
            else:
                tokens += self.block(depth + 1)
        return tokens

    def listener(self, depth: int) -> list[str]:
        kind = self.rng.choice(["forever", "onStart", "onCollision", "onButtonPress"])
        tokens = [kind]
        if kind == "onCollision":
            tokens += ["<", self.constant(), ",", self.constant(), ">"]
        elif kind == "onButtonPress":
            tokens += ["<", self.constant(), ">"]
        return tokens + self.block(depth + 1)

    def block(self, depth: int) -> list[str]:
        tokens = ["{"]
        for _ in range(self.rng.randint(0, 3)):
            tokens.extend(self.line(depth))
        tokens.append("}")
        return tokens

    def call(self, depth: int) -> list[str]:
        tokens = [self.identifier(), "("]
        count = self.rng.randint(0, 3)
        for index in range(count):
            if index:
                tokens.append(",")
            tokens.extend(self.expression(depth + 1))
        tokens.append(")")
        return tokens

    def expression(self, depth: int) -> list[str]:
        rng = self.rng
        if depth >= 4:
            return [self.constant()] if rng.random() < 0.7 else [self.identifier()]
        roll = rng.random()
        if roll < 0.30:
            return [self.constant()]
        if roll < 0.45:
            return [self.identifier()]
        if roll < 0.55:
            tokens = ["["]
            count = rng.randint(0, 3)
            for index in range(count):
                if index:
                    tokens.append(",")
                tokens.extend(self.expression(depth + 1))
            tokens.append("]")
            return tokens
        if roll < 0.65:
            return self.call(depth)
        if roll < 0.72:
            return ["("] + self.expression(depth + 1) + [")"]
        if roll < 0.80:
            return ["!"] + self.expression(depth + 1)
        op = rng.choice(["*", "/", "+", "-", "==", "!=", "<", ">", "<=", ">=", "&&", "||"])
        return self.expression(depth + 1) + [op] + self.expression(depth + 1)

    # -- terminals -----------------------------------------------------------

    def identifier(self) -> str:
        rng = self.rng
        while True:
            name = rng.choice(_IDENT_START) + "".join(
                rng.choices(_IDENT_REST, k=rng.randint(0, 6)))
            if name not in RESERVED:
                return name

    def constant(self) -> str:
        rng = self.rng
        roll = rng.random()
        if roll < 0.3:
            return str(rng.randint(0, 10 ** rng.randint(1, 6)))
        if roll < 0.5:
            return f"{rng.randint(0, 999)}.{rng.randint(0, 999999)}"
        if roll < 0.8:
            content = "".join(rng.choices(_STRING_CHARS, k=rng.randint(0, 10)))
            quote = rng.choice(['"', "'"])
            other = "'" if quote == '"' else '"'
            if rng.random() < 0.2:
                content += other
            return quote + content + quote
        if roll < 0.9:
            return rng.choice(["true", "false"])
        return "null"
