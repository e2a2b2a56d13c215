"""
Token algebra for the web |D|: projections, web membership, coherence,
levels, grades and the bounded enumeration of W(level, width).
"""
from __future__ import annotations
import itertools
from typing import FrozenSet, Iterable, List, Optional, Tuple, TYPE_CHECKING

from .errors import TokenError
from .types.token import Token, TokenContext, get_context
from .types.verdicts import WebVerdict

if TYPE_CHECKING:
    from .types.universe import Universe


def project(alpha: Token, n: int) -> FrozenSet[Token]:
    """ α_n = {β | (n,β) ∈ α} """
    return frozenset(child for i, child in alpha.entries if i == n)


def projections(alpha: Token) -> List[Tuple[int, List[Token]]]:
    groups = []
    for i, entries in itertools.groupby(alpha.entries, key=lambda e: e[0]):
        groups.append((i, [child for _, child in entries]))
    return groups


def union(alpha: Token, beta: Token, ctx: Optional[TokenContext] = None) -> Token:
    if alpha is beta:
        return alpha
    return get_context(ctx).make(alpha.entries + beta.entries)


def shift(alpha: Token, ctx: Optional[TokenContext] = None) -> Token:
    """ shift(α)_n = α_{n+1}, the head projection is dropped """
    return get_context(ctx).make((i - 1, child) for i, child in alpha.entries if i > 0)


def cons_token(a: Iterable[Token], alpha: Token, ctx: Optional[TokenContext] = None) -> Token:
    """ a.α = ({0} × a) ∪ {(n+1, β) | (n,β) ∈ α} """
    ctx = get_context(ctx)
    a = tuple(a)
    key = (tuple(sorted(x.key for x in a)), alpha.key)
    found = ctx.conses.get(key)
    if found is not None:
        return found
    made = ctx.make([(0, x) for x in a] + [(i + 1, child) for i, child in alpha.entries])
    return ctx.remember(ctx.conses, key, made)


def hat(alpha: Token, ctx: Optional[TokenContext] = None) -> Token:
    """ α̂ = {(0, α)} """
    return get_context(ctx).make(((0, alpha),))


def in_web(alpha: Token, ctx: Optional[TokenContext] = None) -> WebVerdict:
    ctx = get_context(ctx)
    found = ctx.web.get(alpha)
    if found is not None:
        return found
    verdict = WebVerdict(True)
    for i, children in projections(alpha):
        for child in children:
            child_verdict = in_web(child, ctx)
            if not child_verdict.in_web:
                verdict = child_verdict
                break
        if not verdict.in_web:
            break
        for b, c in itertools.combinations(children, 2):
            if not _coherent(b, c, ctx):
                verdict = WebVerdict(False, (i, (b, c)))
                break
        if not verdict.in_web:
            break
    return ctx.remember(ctx.web, alpha, verdict)


def _coherent(alpha: Token, beta: Token, ctx: TokenContext) -> bool:
    """ Coherence of two web tokens, no argument validation """
    if alpha is beta or alpha == beta:
        return True
    pair = (alpha, beta) if alpha.key <= beta.key else (beta, alpha)
    found = ctx.coherence.get(pair)
    if found is not None:
        return found
    result = not in_web(union(alpha, beta, ctx), ctx).in_web
    return ctx.remember(ctx.coherence, pair, result)


def require_web(alpha: Token, ctx: Optional[TokenContext] = None) -> Token:
    verdict = in_web(alpha, ctx)
    if not verdict.in_web:
        raise TokenError(f'token {alpha} is not in the web: {verdict}', verdict)
    return alpha


def coherent(alpha: Token, beta: Token, ctx: Optional[TokenContext] = None) -> bool:
    """ α coh β iff α ∪ β ∈ |D| implies α = β """
    ctx = get_context(ctx)
    require_web(alpha, ctx)
    require_web(beta, ctx)
    return _coherent(alpha, beta, ctx)


def level(alpha: Token, ctx: Optional[TokenContext] = None) -> int:
    """ Least n with α ∈ |D_n|; level(∅) = 1 since |D_0| is empty """
    ctx = get_context(ctx)
    found = ctx.levels.get(alpha)
    if found is not None:
        return found
    require_web(alpha, ctx)
    result = 1 + max((level(child, ctx) for _, child in alpha.entries), default=0)
    return ctx.remember(ctx.levels, alpha, result)


def grade(alpha: Token, ctx: Optional[TokenContext] = None) -> int:
    """ |α| = 1 iff some child has grade 0 """
    ctx = get_context(ctx)
    found = ctx.grades.get(alpha)
    if found is not None:
        return found
    require_web(alpha, ctx)
    result = 1 if any(grade(child, ctx) == 0 for _, child in alpha.entries) else 0
    return ctx.remember(ctx.grades, alpha, result)


def rank(alpha: Token, ctx: Optional[TokenContext] = None) -> tuple:
    """ Canonical enumeration order: level, then size, then canonical key """
    return (level(alpha, ctx), len(alpha.entries), alpha.key)


def enumerate_tokens(u: Universe, ctx: Optional[TokenContext] = None) -> List[Token]:
    """
    All web tokens of W(u.level, u.width), sorted by rank.
    Layer k+1 is every entry set of at most `width` pairs (i, β), i < width, β in layer k.
    """
    ctx = get_context(ctx)
    if u.level < 1:
        return []
    layer = [ctx.empty]
    for _ in range(u.level - 1):
        entries = sorted(((i, child) for child in layer for i in range(u.width)),
                         key=lambda e: (e[0], e[1].key))
        found = set()
        for size in range(0, min(u.width, len(entries)) + 1):
            for combo in itertools.combinations(entries, size):
                token = ctx.make(combo)
                if in_web(token, ctx).in_web:
                    found.add(token)
        layer = sorted(found, key=lambda t: rank(t, ctx))
    return layer


def is_clique(tokens: Iterable[Token], ctx: Optional[TokenContext] = None) -> bool:
    return find_incoherent_pair(tokens, ctx) is None


def find_incoherent_pair(tokens: Iterable[Token], ctx: Optional[TokenContext] = None) -> Optional[Tuple[Token, Token]]:
    ctx = get_context(ctx)
    tokens = list(tokens)
    for t in tokens:
        require_web(t, ctx)
    for a, b in itertools.combinations(tokens, 2):
        if not _coherent(a, b, ctx):
            return (a, b)
    return None
