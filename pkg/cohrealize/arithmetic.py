"""
Bounded first order arithmetic: prenex sentences over N with quantifiers
ranging over {0..N}, their realizability interpretation in K and the
realizers built by structural recursion on true sentences.

    sentence := ('forall' | '∀' | 'exists' | '∃') x ('<=' | '≤') N '.' sentence
              | expr '=' expr
    expr     := term ('+' term)*
    term     := factor ('*' factor)*
    factor   := number | x | f '(' expr ')' | '(' expr ')'

with the function constants f ∈ {S, succ, double, square}.
"""
from __future__ import annotations
import re
from typing import Callable, Dict, List, Optional, Tuple, Union

from .cliques import FiniteTerm, NumeralCaseTerm, Term, apply, default_universe, is_prooflike, numeral
from .errors import FalseSentence, ParseError
from .propositions import DEFAULT_BASIS_LIMIT, Prop, U_PROP, check_realizer, eq_pred, forall_prop, implies
from .stable_maps import interpret
from .syntax import App, Lam, Lit, Num, Var as VarSyntax
from .token_core import cons_token
from .types.token import get_context
from .types.universe import Universe
from .types.verdicts import Prooflike, Verdict


FUNCTIONS: Dict[str, Callable[[int], int]] = {
    'S': lambda n: n + 1,
    'succ': lambda n: n + 1,
    'double': lambda n: 2 * n,
    'square': lambda n: n * n,
}


class Expr(object):
    def value(self, env: Dict[str, int]) -> int:
        raise RuntimeError(f'{type(self).__name__}.value() not implemented')
    def __repr__(self): return f'{type(self).__name__}({self})'


class Const(Expr):
    def __init__(self, n: int): self.n = n
    def value(self, env): return self.n
    def __str__(self): return str(self.n)


class Var(Expr):
    def __init__(self, name: str): self.name = name
    def value(self, env): return env[self.name]
    def __str__(self): return self.name


class Add(Expr):
    def __init__(self, left: Expr, right: Expr):
        self.left = left
        self.right = right
    def value(self, env): return self.left.value(env) + self.right.value(env)
    def __str__(self): return f'{self.left} + {self.right}'


class Mul(Expr):
    def __init__(self, left: Expr, right: Expr):
        self.left = left
        self.right = right
    def value(self, env): return self.left.value(env) * self.right.value(env)
    def __str__(self):
        return f'{_factor_str(self.left)} * {_factor_str(self.right)}'


class Call(Expr):
    def __init__(self, function: str, arg: Expr):
        self.function = function
        self.arg = arg
    def value(self, env): return FUNCTIONS[self.function](self.arg.value(env))
    def __str__(self): return f'{self.function}({self.arg})'


def _factor_str(e: Expr) -> str:
    return f'({e})' if isinstance(e, Add) else str(e)


class Sentence(object):
    def is_true(self, env: Optional[Dict[str, int]] = None) -> bool:
        raise RuntimeError(f'{type(self).__name__}.is_true() not implemented')
    def __repr__(self): return f'{type(self).__name__}({self})'


class Equation(Sentence):
    def __init__(self, left: Expr, right: Expr):
        self.left = left
        self.right = right

    def values(self, env) -> Tuple[int, int]:
        return self.left.value(env), self.right.value(env)

    def is_true(self, env=None):
        n, m = self.values(env or {})
        return n == m

    def __str__(self): return f'{self.left} = {self.right}'


class Quantifier(Sentence):
    symbol = '?'
    def __init__(self, var: str, bound: int, body: Sentence):
        self.var = var
        self.bound = bound
        self.body = body

    def instances(self, env) -> List[Dict[str, int]]:
        return [{**env, self.var: n} for n in range(self.bound + 1)]

    def __str__(self): return f'{self.symbol}{self.var}≤{self.bound}. {self.body}'


class Forall(Quantifier):
    symbol = '∀'
    def is_true(self, env=None):
        return all(self.body.is_true(e) for e in self.instances(env or {}))


class Exists(Quantifier):
    symbol = '∃'
    def is_true(self, env=None):
        return any(self.body.is_true(e) for e in self.instances(env or {}))

    def witness(self, env) -> Optional[int]:
        for n, e in enumerate(self.instances(env)):
            if self.body.is_true(e):
                return n
        return None


######################################################################################


_LEXEME = re.compile(r'\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op><=|[∀∃≤=+*().]))')


class SentenceParser:
    def __init__(self, text: str):
        self.text = text
        self.lexemes: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == '':
                break
            m = _LEXEME.match(text, pos)
            if not m:
                raise ParseError(f'unexpected character {text[pos:].lstrip()[0]!r}', pos + len(text[pos:]) - len(text[pos:].lstrip()))
            kind = m.lastgroup
            self.lexemes.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.index = 0
        self.bound_vars: List[str] = []

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.lexemes[self.index] if self.index < len(self.lexemes) else None

    def next(self, what: str) -> Tuple[str, str, int]:
        lexeme = self.peek()
        if lexeme is None:
            raise ParseError(f'unexpected end of sentence, expected {what}', len(self.text))
        self.index += 1
        return lexeme

    def expect(self, *texts: str):
        kind, text, pos = self.next(' or '.join(map(repr, texts)))
        if text not in texts:
            raise ParseError(f"expected {' or '.join(map(repr, texts))}, got {text!r}", pos)

    def sentence(self) -> Sentence:
        lexeme = self.peek()
        if lexeme is not None and lexeme[1] in ('forall', '∀', 'exists', '∃'):
            self.index += 1
            kind, var, pos = self.next('a variable')
            if kind != 'name' or var in FUNCTIONS or var in ('forall', 'exists'):
                raise ParseError(f'expected a variable, got {var!r}', pos)
            self.expect('<=', '≤')
            kind, bound, pos = self.next('a bound')
            if kind != 'num':
                raise ParseError(f'expected a numeric bound, got {bound!r}', pos)
            self.expect('.')
            self.bound_vars.append(var)
            body = self.sentence()
            self.bound_vars.pop()
            cls = Forall if lexeme[1] in ('forall', '∀') else Exists
            return cls(var, int(bound), body)
        left = self.expr()
        self.expect('=')
        right = self.expr()
        return Equation(left, right)

    def expr(self) -> Expr:
        result = self.term()
        while self.peek() is not None and self.peek()[1] == '+':
            self.index += 1
            result = Add(result, self.term())
        return result

    def term(self) -> Expr:
        result = self.factor()
        while self.peek() is not None and self.peek()[1] == '*':
            self.index += 1
            result = Mul(result, self.factor())
        return result

    def factor(self) -> Expr:
        kind, text, pos = self.next('a number, variable or function')
        if kind == 'num':
            return Const(int(text))
        if text == '(':
            inner = self.expr()
            self.expect(')')
            return inner
        if kind == 'name' and text in FUNCTIONS:
            self.expect('(')
            arg = self.expr()
            self.expect(')')
            return Call(text, arg)
        if kind == 'name':
            if text not in self.bound_vars:
                raise ParseError(f'unbound variable {text!r}', pos)
            return Var(text)
        raise ParseError(f'unexpected {text!r}', pos)


def parse_sentence(text: str) -> Sentence:
    parser = SentenceParser(text)
    result = parser.sentence()
    lexeme = parser.peek()
    if lexeme is not None:
        raise ParseError(f'unexpected trailing input {lexeme[1]!r}', lexeme[2])
    return result


######################################################################################


def _nk(n: int) -> Prop:
    return eq_pred('N_K', n, n)


def arith_prop(sentence: Sentence, u: Optional[Universe] = None, limit: int = DEFAULT_BASIS_LIMIT,
               env: Optional[Dict[str, int]] = None) -> Prop:
    """
    ||e1 = e2||     = n ∼_{N_K} m for the values n, m
    ||∀x≤N. A(x)|| = ∩_{n≤N} (n ∼ n → ||A(n)||)
    ||∃x≤N. A(x)|| = (∩_{n≤N} (n ∼ n → ||A(n)|| → U)) → U, the second order encoding at X = U
    """
    u = u or default_universe()
    env = env or {}
    if isinstance(sentence, Equation):
        n, m = sentence.values(env)
        return eq_pred('N_K', n, m).with_label(str(sentence))
    if isinstance(sentence, Forall):
        props = [implies(_nk(n), arith_prop(sentence.body, u, limit, e), u, limit)
                 for n, e in enumerate(sentence.instances(env))]
        return forall_prop(props, label=str(sentence))
    if isinstance(sentence, Exists):
        props = [implies(_nk(n), implies(arith_prop(sentence.body, u, limit, e), U_PROP, u, limit), u, limit)
                 for n, e in enumerate(sentence.instances(env))]
        result = implies(forall_prop(props), U_PROP, u, limit)
        result.label = str(sentence)
        return result
    raise TypeError(f'not a sentence: {sentence!r}')


def case_term(branches: List[Term], name: str = 'case') -> Term:
    """
    t with t⊤_D = ⊤_D and t n̄ = branches[n]. With finite branches this is the finite
    clique {ν₀} ∪ {{ν_n}.β | β ∈ branches[n]}.
    """
    ctx = get_context()
    if all(b.is_finite for b in branches):
        tokens = [ctx.nu(0)]
        for n, b in enumerate(branches):
            tokens.extend(cons_token((ctx.nu(n),), beta, ctx) for beta in b.tokens())
        return FiniteTerm(tokens, name=name)
    return NumeralCaseTerm(lambda n: branches[n], bound=len(branches) - 1, name=name)


def realize(sentence: Sentence, u: Optional[Universe] = None, env: Optional[Dict[str, int]] = None) -> Term:
    """ The realizer of a true sentence, by recursion on its prenex form """
    u = u or default_universe()
    env = env or {}
    if isinstance(sentence, Equation):
        n, m = sentence.values(env)
        if n != m:
            raise FalseSentence(f'{sentence} is false: {n} ≠ {m}')
        return numeral(n)
    if isinstance(sentence, Forall):
        branches = [realize(sentence.body, u, e) for e in sentence.instances(env)]
        return case_term(branches, name=f'∀{sentence.var}')
    if isinstance(sentence, Exists):
        n = sentence.witness(env)
        if n is None:
            raise FalseSentence(f'{sentence} has no witness ≤ {sentence.bound}')
        p = realize(sentence.body, u, {**env, sentence.var: n})
        return interpret(Lam('f', App(App(VarSyntax('f'), Num(n)), Lit(p))), u=u)
    raise TypeError(f'not a sentence: {sentence!r}')


def arith_realize(sentence: Union[str, Sentence], u: Optional[Universe] = None,
                  limit: int = DEFAULT_BASIS_LIMIT) -> Tuple[Term, Verdict]:
    """ Builds the realizer of a true sentence and checks it; false sentences raise FalseSentence """
    u = u or default_universe()
    if isinstance(sentence, str):
        sentence = parse_sentence(sentence)
    if not sentence.is_true():
        raise FalseSentence(f'{sentence} is false')
    t = realize(sentence, u)
    return t, check_realizer(t, arith_prop(sentence, u, limit), u)


def realizer_prooflike(t: Term, u: Optional[Universe] = None) -> Prooflike:
    """ Lazy realizers are scanned one level down, their traces run over every clique """
    u = u or default_universe()
    if t.is_finite:
        return is_prooflike(t)
    return is_prooflike(t, Universe(max(1, u.level - 1), u.width, u.fuel, u.ctx))


######################################################################################


def _function(f: Union[str, Callable[[int], int]]) -> Callable[[int], int]:
    if callable(f):
        return f
    if f not in FUNCTIONS:
        raise ValueError(f'unknown function constant {f!r}, expected one of {", ".join(FUNCTIONS)}')
    return FUNCTIONS[f]


def function_realizer(f: Union[str, Callable[[int], int]], bound: int) -> Term:
    """ t_f with t_f ⊤_D = ⊤_D and t_f n̄ = f(n)‾ for n ≤ bound """
    fn = _function(f)
    name = f if isinstance(f, str) else getattr(f, '__name__', 'f')
    return case_term([numeral(fn(n)) for n in range(bound + 1)], name=f't_{name}')


def function_prop(f: Union[str, Callable[[int], int]], bound: int, u: Optional[Universe] = None) -> Prop:
    """ ∀x≤N. x ∼ x → f(x) ∼ f(x), the statement t_f realizes """
    fn = _function(f)
    u = u or default_universe()
    props = [implies(_nk(n), _nk(fn(n)), u) for n in range(bound + 1)]
    return forall_prop(props, label=f'∀x≤{bound}. x → {f if isinstance(f, str) else "f"}(x)')


def check_function_realizer(f: Union[str, Callable[[int], int]], bound: int,
                            u: Optional[Universe] = None) -> List[str]:
    """ Failures of t_f⊤_D = ⊤_D, t_f n̄ = f(n)‾, t_f ∈ P and t_f ⊩ function_prop """
    from .cliques import TOP
    u = u or default_universe()
    fn = _function(f)
    t = function_realizer(f, bound)
    failures = []
    if apply(t, TOP, u) != TOP:
        failures.append('t_f ⊤_D ≠ ⊤_D')
    for n in range(bound + 1):
        if apply(t, numeral(n), u) != numeral(fn(n)):
            failures.append(f't_f {n}̄ ≠ {fn(n)}̄')
    if not is_prooflike(t).yes:
        failures.append('t_f is not proof-like')
    verdict = check_realizer(t, function_prop(f, bound, u), u)
    if not verdict.ok:
        failures.append(f't_f does not realize its statement: {verdict}')
    return failures


FIXTURE_TRUE = [
    '0 = 0',
    '1 + 1 = 2',
    '2 * 3 = 6',
    'forall x <= 3. x + 0 = x',
    'forall x <= 3. x * 1 = x',
    'forall x <= 3. forall y <= 3. x + y = y + x',
    'exists x <= 3. x = 1',
    'exists x <= 3. x * x = 4',
    'forall x <= 3. exists y <= 3. x * 0 = y',
    'forall x <= 2. exists y <= 3. y = S(x)',
    'exists x <= 3. x + x = 6',
    'forall x <= 3. double(x) = x + x',
]

FIXTURE_FALSE = [
    '0 = 1',
    'forall x <= 3. x + 1 = 2',
    'exists x <= 3. x * x = 2',
    'forall x <= 3. exists y <= 3. y = S(x)',
]
