from __future__ import annotations
from typing import Optional, Tuple, TYPE_CHECKING

if TYPE_CHECKING:
    from .token import Token


class Outcome:
    """ Three-valued result of running a process t ⋆ π """
    TOP = 'Top'
    BOT = 'Bot'
    INCONCLUSIVE = 'Inconclusive'


class WebVerdict:
    def __init__(self, in_web: bool, witness: Optional[Tuple[int, Tuple[Token, Token]]] = None):
        if in_web == (witness is not None):
            raise ValueError('WebVerdict witness must be present iff the token is not in the web')
        self.in_web = in_web
        self.witness = witness

    def __bool__(self): return self.in_web

    def __str__(self):
        if self.in_web:
            return 'in web'
        index, (b, c) = self.witness
        return f'not in web: projection {index} holds incoherent {b} and {c}'

    def __repr__(self): return f'WebVerdict({self})'


class EvalResult:
    def __init__(self, outcome: str, witness: Optional[Token] = None, steps: int = 0):
        self.outcome = outcome
        self.witness = witness
        self.steps = steps

    @property
    def top(self): return self.outcome == Outcome.TOP
    @property
    def bot(self): return self.outcome == Outcome.BOT
    @property
    def inconclusive(self): return self.outcome == Outcome.INCONCLUSIVE

    def __eq__(self, other):
        if isinstance(other, str):
            return self.outcome == other
        return isinstance(other, EvalResult) and self.outcome == other.outcome

    def __hash__(self): return hash(self.outcome)
    def __str__(self): return self.outcome
    def __repr__(self): return f'EvalResult({self.outcome}, witness={self.witness}, steps={self.steps})'

    def to_json(self) -> dict:
        data = {'outcome': self.outcome, 'steps': self.steps}
        if self.witness is not None:
            data['witness'] = self.witness.to_json()
        return data


class Prooflike:
    YES = 'Yes'
    NO = 'No'
    INCONCLUSIVE = 'InconclusiveLazy'

    def __init__(self, status: str, witness: Optional[Token] = None, bounded: bool = False, scanned: int = 0):
        self.status = status
        self.witness = witness
        self.bounded = bounded
        self.scanned = scanned

    @property
    def yes(self): return self.status == Prooflike.YES
    @property
    def no(self): return self.status == Prooflike.NO

    def __str__(self):
        if self.status == Prooflike.NO:
            return f'No({self.witness})'
        if self.status == Prooflike.YES and self.bounded:
            return f'Yes (bounded, {self.scanned} tokens)'
        return self.status

    def __repr__(self): return f'Prooflike({self})'

    def to_json(self) -> dict:
        data = {'status': self.status, 'bounded': self.bounded}
        if self.witness is not None:
            data['witness'] = self.witness.to_json()
        return data


class Verdict:
    """ Outcome of checking a realizer against a proposition """
    REALIZES = 'Realizes'
    REFUTED = 'Refuted'
    INCONCLUSIVE = 'Inconclusive'

    def __init__(self, status: str, counterexample=None, exact: bool = True, tested: int = 0, note: str = ''):
        self.status = status
        self.counterexample = counterexample
        self.exact = exact
        self.tested = tested
        self.note = note

    @staticmethod
    def realizes(exact=True, tested=0, note='') -> Verdict:
        return Verdict(Verdict.REALIZES, exact=exact, tested=tested, note=note)

    @staticmethod
    def refuted(counterexample, tested=0, note='') -> Verdict:
        return Verdict(Verdict.REFUTED, counterexample, tested=tested, note=note)

    @staticmethod
    def inconclusive(tested=0, note='') -> Verdict:
        return Verdict(Verdict.INCONCLUSIVE, exact=False, tested=tested, note=note)

    @property
    def ok(self): return self.status == Verdict.REALIZES
    @property
    def refutes(self): return self.status == Verdict.REFUTED

    def __str__(self):
        if self.status == Verdict.REFUTED:
            return f'Refuted({self.counterexample})'
        if self.status == Verdict.REALIZES and not self.exact:
            return 'Realizes (at bound)'
        return self.status

    def __repr__(self): return f'Verdict({self})'

    def to_json(self) -> dict:
        data = {'status': self.status, 'exact': self.exact, 'tested': self.tested}
        if self.counterexample is not None:
            to_json = getattr(self.counterexample, 'to_json', None)
            data['counterexample'] = to_json() if to_json else str(self.counterexample)
        if self.note:
            data['note'] = self.note
        return data
