# these imports are executed on `import cohrealize`
from .types.universe import Universe
from .cliques import Stack, Process, FiniteTerm, evaluate, push, apply, numeral, bar_I, identity, cc, k_of, is_prooflike
from .stable_maps import interpret, trace_of, fun
from .parse_syntax import parse_term, parse_stack
from .propositions import Prop, implies, forall_prop, j_U, check_realizer
from .arithmetic import arith_realize
from .bar_recursion import br, dns_check
