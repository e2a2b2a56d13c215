import sys
from termcolor import colored

is_windows = sys.platform == 'win32'


class Color:
    DEFAULT = None
    RED = "red"
    GREEN = "green"
    YELLOW = "yellow"
    BLUE = "blue"


# on windows use colorama to enable ANSI color escape sequences
if is_windows:
    from colorama import just_fix_windows_console
    just_fix_windows_console()


class Output:
    """ Process-wide console switches, toggled by the CLI """
    verbose = False
    quiet = False


def get_colored_text(text:str, color):
    return colored(text, color=color) if color else text


def console(text:str, color=None, end="\n"):
    """ Always flush, reports are often piped into other tools """
    if Output.quiet:
        return
    print(get_colored_text(text, color), end=end, flush=True)


def verbose(text:str):
    """ Only printed with --verbose """
    if Output.verbose:
        console(text, color=Color.BLUE)


def warning(text:str):
    console(text, color=Color.YELLOW)


def error(text:str):
    """ Prints a message as an error, usually colored red. Never silenced. """
    print(get_colored_text(text, Color.RED), file=sys.stderr, flush=True)
