"""
Exceptions raised by cohrealize. All of them are RuntimeErrors so callers
that only care about "something went wrong" can catch RuntimeError.
"""


class TokenError(RuntimeError):
    """ A token outside the web |D| was used where a web token is required """
    def __init__(self, message:str, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class CliqueError(RuntimeError):
    """ Two tokens that must be coherent are not """
    def __init__(self, message:str, pair=None):
        super().__init__(message)
        self.pair = pair


class ParseError(RuntimeError):
    def __init__(self, message:str, position:int = -1):
        if position >= 0:
            message = f'{message} (at offset {position})'
        super().__init__(message)
        self.position = position


class UnboundVariable(RuntimeError):
    pass


class FalseSentence(RuntimeError):
    pass


class IllPosedInput(RuntimeError):
    pass


class AntichainError(RuntimeError):
    """ A computed meet violates the lattice conditions, this is an internal bug """
    pass


class ConfigError(RuntimeError):
    pass
