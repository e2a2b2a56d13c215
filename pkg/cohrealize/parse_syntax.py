"""
Textual syntax and JSON codecs.

    term  := cc | id | top | bot | <name>
           | (lam x ... body) | (app f a ...) | (num n) | (barI i ...)
           | (k <stack>) | (lit <json-term>)
    stack := (stack e1 ... en [top]) | (ideal <json-token> ...)

A trailing bare `top` in a stack literal sets the tail to ⊤_D, otherwise the tail is ⊥_D.
"""
from __future__ import annotations
import json
from typing import List, Optional

from .cliques import (
    BOT, TOP, EMPTY_TAIL, TOP_TAIL, FiniteTerm, Stack, Term, apply, bar_I, cc, identity, k_of, numeral,
)
from .errors import CliqueError, ParseError, TokenError
from .syntax import App, BarI, BotD, Cc, Id, KOf, Lam, Lit, Num, Syntax, TopD, Var
from .token_core import require_web
from .types.token import Token, get_context
from .types.universe import Universe


class _Lexeme:
    __slots__ = ('kind', 'text', 'pos')
    def __init__(self, kind: str, text: str, pos: int):
        self.kind = kind   # '(' ')' 'atom' 'json'
        self.text = text
        self.pos = pos
    def __repr__(self): return f'{self.kind}:{self.text}@{self.pos}'


def _scan_json(text: str, start: int) -> int:
    """ Returns the offset one past the balanced JSON value starting at `start` """
    depth = 0
    i = start
    in_string = False
    while i < len(text):
        ch = text[i]
        if in_string:
            if ch == '\\':
                i += 1
            elif ch == '"':
                in_string = False
        elif ch == '"':
            in_string = True
        elif ch in '[{':
            depth += 1
        elif ch in ']}':
            depth -= 1
            if depth == 0:
                return i + 1
        i += 1
    raise ParseError('unterminated JSON literal', start)


def tokenize(text: str) -> List[_Lexeme]:
    lexemes = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in '()':
            lexemes.append(_Lexeme(ch, ch, i))
            i += 1
        elif ch in '[{':
            end = _scan_json(text, i)
            lexemes.append(_Lexeme('json', text[i:end], i))
            i = end
        elif ch in ']}':
            raise ParseError(f'unexpected {ch!r}', i)
        else:
            start = i
            while i < len(text) and not text[i].isspace() and text[i] not in '()[]{}':
                i += 1
            lexemes.append(_Lexeme('atom', text[start:i], start))
    return lexemes


class SyntaxParser:
    def __init__(self, text: str, universe: Optional[Universe] = None):
        self.text = text
        self.lexemes = tokenize(text)
        self.index = 0
        self.universe = universe

    def peek(self) -> Optional[_Lexeme]:
        return self.lexemes[self.index] if self.index < len(self.lexemes) else None

    def next(self, what: str) -> _Lexeme:
        lexeme = self.peek()
        if lexeme is None:
            raise ParseError(f'unexpected end of input, expected {what}', len(self.text))
        self.index += 1
        return lexeme

    def expect_close(self):
        lexeme = self.next("')'")
        if lexeme.kind != ')':
            raise ParseError(f"expected ')', got {lexeme.text!r}", lexeme.pos)

    def finish(self):
        lexeme = self.peek()
        if lexeme is not None:
            raise ParseError(f'unexpected trailing input {lexeme.text!r}', lexeme.pos)

    def natural(self) -> int:
        lexeme = self.next('a natural number')
        if lexeme.kind != 'atom' or not lexeme.text.isdigit():
            raise ParseError(f'expected a natural number, got {lexeme.text!r}', lexeme.pos)
        return int(lexeme.text)

    def name(self) -> str:
        lexeme = self.next('a variable name')
        if lexeme.kind != 'atom' or not _is_name(lexeme.text):
            raise ParseError(f'expected a variable name, got {lexeme.text!r}', lexeme.pos)
        return lexeme.text

    def term(self) -> Syntax:
        lexeme = self.next('a term')
        if lexeme.kind == 'atom':
            return _atom(lexeme)
        if lexeme.kind != '(':
            raise ParseError(f'expected a term, got {lexeme.text!r}', lexeme.pos)
        head = self.next('a form name')
        if head.kind != 'atom':
            raise ParseError(f'expected a form name, got {head.text!r}', head.pos)
        form = head.text
        if form == 'lam':
            names = [self.name()]
            while self._next_is_name_before_body():
                names.append(self.name())
            body = self.term()
            self.expect_close()
            for name in reversed(names):
                body = Lam(name, body)
            return body
        if form == 'app':
            result = self.term()
            arg = self.term()
            result = App(result, arg)
            while self.peek() is not None and self.peek().kind != ')':
                result = App(result, self.term())
            self.expect_close()
            return result
        if form == 'num':
            n = self.natural()
            self.expect_close()
            return Num(n)
        if form == 'barI':
            indices = []
            while self.peek() is not None and self.peek().kind == 'atom':
                indices.append(self.natural())
            self.expect_close()
            return BarI(tuple(indices))
        if form == 'k':
            stack = self.stack()
            self.expect_close()
            return KOf(stack)
        if form == 'lit':
            blob = self.next('a JSON term')
            if blob.kind != 'json':
                raise ParseError(f'expected a JSON term, got {blob.text!r}', blob.pos)
            term = _json_term(blob)
            self.expect_close()
            return Lit(term)
        raise ParseError(f'unknown form {form!r}', head.pos)

    def _next_is_name_before_body(self) -> bool:
        """ In (lam x y body) every atom but the last one is a binder """
        if self.index + 1 >= len(self.lexemes):
            return False
        lexeme, after = self.lexemes[self.index], self.lexemes[self.index + 1]
        return lexeme.kind == 'atom' and _is_name(lexeme.text) and after.kind != ')'

    def stack(self) -> Stack:
        from .stable_maps import interpret
        opening = self.next('a stack')
        if opening.kind != '(':
            raise ParseError(f"expected '(stack ...)', got {opening.text!r}", opening.pos)
        head = self.next("'stack'")
        if head.kind == 'atom' and head.text == 'ideal':
            generators = []
            while self.peek() is not None and self.peek().kind == 'json':
                blob = self.next('a JSON token')
                generators.append(_json_token(blob))
            self.expect_close()
            try:
                return ideal_stack(generators)
            except ParseError as e:
                raise ParseError(str(e), head.pos)
        if head.kind != 'atom' or head.text != 'stack':
            raise ParseError(f"expected 'stack', got {head.text!r}", head.pos)
        items: List[Syntax] = []
        while self.peek() is not None and self.peek().kind != ')':
            items.append(self.term())
        self.expect_close()
        tail = EMPTY_TAIL
        if items and isinstance(items[-1], TopD):
            items.pop()
            tail = TOP_TAIL
        return Stack.seq([interpret(e, u=self.universe) for e in items], tail)


def _is_name(text: str) -> bool:
    return text.isidentifier() and text not in ('cc', 'id', 'top', 'bot')


def _atom(lexeme: _Lexeme) -> Syntax:
    text = lexeme.text
    if text == 'cc':  return Cc()
    if text == 'id':  return Id()
    if text == 'top': return TopD()
    if text == 'bot': return BotD()
    if _is_name(text):
        return Var(text)
    raise ParseError(f'unexpected atom {text!r}', lexeme.pos)


def _json_blob(lexeme: _Lexeme):
    try:
        return json.loads(lexeme.text)
    except json.JSONDecodeError as e:
        raise ParseError(f'invalid JSON: {e.msg}', lexeme.pos + e.pos)


def _json_term(lexeme: _Lexeme) -> Term:
    try:
        return term_from_json(_json_blob(lexeme))
    except ParseError as e:
        if e.position < 0:
            raise ParseError(str(e), lexeme.pos)
        raise


def _json_token(lexeme: _Lexeme) -> Token:
    try:
        return token_from_json(_json_blob(lexeme))
    except (ValueError, TypeError) as e:
        raise ParseError(str(e), lexeme.pos)


def parse_term(text: str, universe: Optional[Universe] = None) -> Syntax:
    parser = SyntaxParser(text, universe)
    result = parser.term()
    parser.finish()
    return result


def parse_stack(text: str, universe: Optional[Universe] = None) -> Stack:
    parser = SyntaxParser(text, universe)
    result = parser.stack()
    parser.finish()
    return result


######################################################################################


def token_from_json(data) -> Token:
    return get_context().from_json(data)


def ideal_stack(generators) -> Stack:
    """ Stack.ideal with the generators checked: web tokens whose projections are coherent """
    stack = Stack.ideal(generators)
    try:
        for g in generators:
            require_web(g)
        stack.as_seq()
    except TokenError as e:
        raise ParseError(f'bad ideal generator: {e}')
    except CliqueError as e:
        raise ParseError(str(e))
    return stack


def term_from_json(data) -> Term:
    if not isinstance(data, dict) or len(data) != 1:
        raise ParseError(f'term must be a one-key JSON object, got {data!r}')
    kind, value = next(iter(data.items()))
    if kind == 'finite':
        if not isinstance(value, list):
            raise ParseError(f'finite term must be a list of tokens, got {value!r}')
        try:
            return FiniteTerm(require_web(token_from_json(t)) for t in value)
        except (ValueError, TypeError, TokenError) as e:
            raise ParseError(f'bad finite term: {e}')
        except CliqueError as e:
            raise ParseError(f'finite term is not a clique: {e}')
    if kind == 'named':
        if value == 'cc':  return cc()
        if value == 'id':  return identity()
        if value == 'top': return TOP
        if value == 'bot': return BOT
        try:
            if isinstance(value, dict) and 'num' in value:
                return numeral(int(value['num']))
            if isinstance(value, dict) and 'barI' in value:
                return bar_I(int(i) for i in value['barI'])
        except (ValueError, TypeError) as e:
            raise ParseError(f'bad named term {value!r}: {e}')
        raise ParseError(f'unknown named term {value!r}')
    if kind == 'apply':
        if not isinstance(value, list) or len(value) != 2:
            raise ParseError(f'apply takes [term, term], got {value!r}')
        return apply(term_from_json(value[0]), term_from_json(value[1]))
    if kind == 'k':
        return k_of(stack_from_json(value))
    raise ParseError(f'unknown term kind {kind!r}')


def stack_from_json(data) -> Stack:
    if not isinstance(data, dict) or len(data) != 1:
        raise ParseError(f'stack must be a one-key JSON object, got {data!r}')
    kind, value = next(iter(data.items()))
    if kind == 'seq':
        if not isinstance(value, dict):
            raise ParseError(f'seq stack must be an object with "items" and "tail", got {value!r}')
        tail = value.get('tail', EMPTY_TAIL)
        if tail not in (EMPTY_TAIL, TOP_TAIL):
            raise ParseError(f'stack tail must be "empty" or "top", got {tail!r}')
        items = value.get('items', [])
        if not isinstance(items, list):
            raise ParseError(f'seq items must be a list, got {items!r}')
        return Stack.seq([term_from_json(t) for t in items], tail)
    if kind == 'ideal':
        if not isinstance(value, list):
            raise ParseError(f'ideal stack must be a list of tokens, got {value!r}')
        try:
            generators = [token_from_json(t) for t in value]
        except (ValueError, TypeError) as e:
            raise ParseError(f'bad ideal generator: {e}')
        return ideal_stack(generators)
    raise ParseError(f'unknown stack kind {kind!r}')

