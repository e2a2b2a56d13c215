import psutil
from typing import List, Optional

from .errors import ConfigError
from .types.universe import DEFAULT_FUEL, DEFAULT_LEVEL, DEFAULT_WIDTH, Universe
from .propositions import DEFAULT_BASIS_LIMIT
from .suite_runner import DEFAULT_TERM_SIZE

COMMANDS = ['eval', 'suite', 'enumerate', 'prooflike', 'realize', 'br']
FORMATS = ['text', 'json']

# flags that take a value, either `--flag value` or `--flag=value`
VALUE_FLAGS = ['--level', '--width', '--fuel', '--seed', '--format', '--jobs', '--out', '--basis-limit', '--term-size']


###
# Created once from the command line and handed to the command being run
#
class RealizeConfig:
    def __init__(self, args: List[str]):
        self.command: Optional[str] = None
        self.command_args: List[str] = []
        # bounded universe W(level, width)
        self.level = DEFAULT_LEVEL
        self.width = DEFAULT_WIDTH
        self.fuel  = DEFAULT_FUEL
        self.seed  = 0 # for sampled properties
        self.format = 'text'
        self.jobs    = psutil.cpu_count() or 1
        self.verbose = False
        self.quiet   = False
        self.help    = False
        self.out: Optional[str] = None # optional JSON report path
        self.basis_limit = DEFAULT_BASIS_LIMIT
        self.term_size = DEFAULT_TERM_SIZE # tokens per checked term in suites
        self.unused_args = []
        self.parse_args(args)

    def parse_args(self, args: List[str]):
        args = list(args)
        it = iter(args)
        for arg in it:
            value = None
            if '=' in arg and arg.startswith('--'):
                arg, value = arg.split('=', 1)
            if arg in VALUE_FLAGS and value is None:
                value = next(it, None)
                if value is None:
                    raise ConfigError(f'{arg} expects a value')

            if   arg in ('-h', '--help', 'help'): self.help = True
            elif arg in ('-v', '--verbose'):      self.verbose = True
            elif arg in ('-q', '--quiet'):        self.quiet = True
            elif arg == '--level':       self.level = self._natural(arg, value)
            elif arg == '--width':       self.width = self._natural(arg, value)
            elif arg == '--fuel':        self.fuel  = self._natural(arg, value)
            elif arg == '--seed':        self.seed  = self._natural(arg, value)
            elif arg == '--jobs':        self.jobs  = max(1, self._natural(arg, value))
            elif arg == '--basis-limit': self.basis_limit = self._natural(arg, value)
            elif arg == '--term-size':   self.term_size = self._natural(arg, value)
            elif arg == '--out':         self.out = value
            elif arg == '--format':
                if value not in FORMATS:
                    raise ConfigError(f'--format must be one of {", ".join(FORMATS)}, got {value!r}')
                self.format = value
            elif arg.startswith('--'):
                self.unused_args.append(arg)
            elif self.command is None:
                if arg not in COMMANDS:
                    raise ConfigError(f'unknown command {arg!r}, expected one of {", ".join(COMMANDS)}')
                self.command = arg
            else:
                self.command_args.append(arg)

    @staticmethod
    def _natural(flag: str, value: str) -> int:
        try:
            n = int(value)
        except ValueError:
            raise ConfigError(f'{flag} expects a natural number, got {value!r}')
        if n < 0:
            raise ConfigError(f'{flag} expects a natural number, got {n}')
        return n

    @property
    def json(self): return self.format == 'json'

    def validate(self):
        """ level ≥ 1 and width ≥ 1, except `enumerate tokens` which lists the empty |D_0| """
        listing_tokens = self.command == 'enumerate' and self.command_args[:1] == ['tokens']
        if self.level < 1 and not listing_tokens:
            raise ConfigError(f'--level must be at least 1, got {self.level}')
        if self.width < 1 and not listing_tokens:
            raise ConfigError(f'--width must be at least 1, got {self.width}')
        if self.term_size < 1:
            raise ConfigError(f'--term-size must be at least 1, got {self.term_size}')
        if self.unused_args:
            raise ConfigError(f'unknown arguments: {" ".join(self.unused_args)}')
        return self

    def universe(self) -> Universe:
        return Universe(self.level, self.width, self.fuel)

    def to_json(self) -> dict:
        return {'level': self.level, 'width': self.width, 'fuel': self.fuel, 'seed': self.seed}
