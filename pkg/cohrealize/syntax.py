"""
A small term language over D: λ-calculus with cc and the named constants.
`interpret` in stable_maps gives each node its denotation.
"""
from __future__ import annotations
from typing import FrozenSet, Tuple, TYPE_CHECKING

if TYPE_CHECKING:
    from .cliques import Stack, Term


class Syntax(object):
    pure = True   # no ⊤_D/⊥_D literals, continuations or raw tokens

    def free_vars(self) -> FrozenSet[str]:
        return frozenset()

    def is_closed(self) -> bool:
        return not self.free_vars()

    def __repr__(self): return f'{type(self).__name__}({self})'


class Var(Syntax):
    def __init__(self, name: str):
        self.name = name
    def free_vars(self): return frozenset((self.name,))
    def __str__(self): return self.name


class Lam(Syntax):
    def __init__(self, name: str, body: Syntax):
        self.name = name
        self.body = body
    @property
    def pure(self): return self.body.pure
    def free_vars(self): return self.body.free_vars() - {self.name}
    def __str__(self): return f'(lam {self.name} {self.body})'


class App(Syntax):
    def __init__(self, fn: Syntax, arg: Syntax):
        self.fn = fn
        self.arg = arg
    @property
    def pure(self): return self.fn.pure and self.arg.pure
    def free_vars(self): return self.fn.free_vars() | self.arg.free_vars()
    def __str__(self): return f'(app {self.fn} {self.arg})'


class Cc(Syntax):
    def __str__(self): return 'cc'


class Id(Syntax):
    def __str__(self): return 'id'


class Num(Syntax):
    def __init__(self, n: int):
        self.n = n
    def __str__(self): return f'(num {self.n})'


class BarI(Syntax):
    def __init__(self, indices: Tuple[int, ...]):
        self.indices = tuple(sorted(set(indices)))
    def __str__(self): return '(barI ' + ' '.join(map(str, self.indices)) + ')'


class TopD(Syntax):
    pure = False
    def __str__(self): return 'top'


class BotD(Syntax):
    pure = False
    def __str__(self): return 'bot'


class KOf(Syntax):
    pure = False
    def __init__(self, stack: Stack):
        self.stack = stack
    def __str__(self): return f'(k {self.stack})'


class Lit(Syntax):
    pure = False
    def __init__(self, term: Term):
        self.term = term
    def __str__(self): return f'(lit {self.term})'


def lam(*names_and_body) -> Syntax:
    """ lam('x', 'y', body) == Lam('x', Lam('y', body)) """
    *names, body = names_and_body
    for name in reversed(names):
        body = Lam(name, body)
    return body


def app(fn: Syntax, *args: Syntax) -> Syntax:
    """ Left-nested application: app(f, a, b) == App(App(f, a), b) """
    for arg in args:
        fn = App(fn, arg)
    return fn
