import sys
from typing import Tuple
from abc import ABCMeta
from aenum import MultiValueEnum

class GraphFormatError(Exception):
    """An Error type for graph input that cannot be parsed.
       Raised for malformed graph6 records (bad header, truncated or overlong
       bit field), malformed edge lists ('n m' header followed by 'u v' lines),
       vertex labels out of range and self-loops."""
    def __init__(self, message: str="MALFORMED GRAPH"):
        super().__init__(message)

class GraphSizeError(ValueError):
    """An Error type for inputs outside of an accepted range (see LIMITS).
       pygoodgraphs refuses these inputs instead of silently degrading, e.g.
       canonical_form on more than 12 vertices."""
    def __init__(self, message: str="GRAPH SIZE NOT SUPPORTED"):
        super().__init__(message)

class OrderError(Exception):
    """An Error type for vertex orders that are not a permutation of the vertex
       set, or that are not connected where a connected order is required."""
    def __init__(self, message: str="INVALID VERTEX ORDER"):
        super().__init__(message)

class ColouringError(Exception):
    """An Error type for colourings that do not assign a colour to every vertex
       of the graph they are checked against"""
    def __init__(self, message: str="INCOMPLETE COLOURING"):
        super().__init__(message)

class DisconnectedGraphError(Exception):
    """An Error type for connected-only operations (connected orders, bad order
       search, gamma_c) invoked on a disconnected graph"""
    def __init__(self, message: str="GRAPH IS NOT CONNECTED"):
        super().__init__(message)

class ObstructionSpecError(ValueError):
    """An Error type for obstruction, prism and bracelet parameters that violate
       the family's arity, length or parity constraints"""
    def __init__(self, message: str="INVALID OBSTRUCTION SPEC"):
        super().__init__(message)

class ClawFoundError(Exception):
    """An Error type for the claw-free precondition of is_good_clawfree.
       The claw found is available as the 'claw' attribute, centre first."""
    def __init__(self, message: str="GRAPH CONTAINS A CLAW", claw: Tuple[int, ...]=None):
        super().__init__(message)
        self.claw = claw

class PreconditionError(Exception):
    """An Error type for the lemma suite: the order must be connected and bad.
       If the suite is run with strict=False a warning is printed instead and
       no verdicts are produced."""
    def __init__(self, message: str="LEMMA SUITE PRECONDITION FAILED"):
        super().__init__(message)


class Parity(MultiValueEnum):
    ANY = "any", "all", "*"
    ODD = "odd", "o"
    EVEN = "even", "e"

    def accepts(self, length: int) -> bool:
        if self is Parity.ANY:
            return True
        return (length % 2 == 1) == (self is Parity.ODD)

class OutputMode(MultiValueEnum):
    JSON = "json", "j"
    TEXT = "text", "txt", "t"

class LemmaId(MultiValueEnum):
    LM2 = "Lm2", "lm2"
    C2 = "C2", "c2"
    LM1 = "Lm1", "lm1"
    C1 = "C1", "c1"
    CUNIQUE = "CUnique", "cunique"
    LM3 = "Lm3", "lm3"
    C3 = "C3", "c3"
    END_FP = "l:endFP", "endfp"
    PWO = "l:Pwo", "pwo"


# Accepted (low, high) ranges, inclusive
LIMITS = {"canonical_form":             (0, 12),
          "graph6":                     (0, 62),
          "census":                     (1, 7),
          "census_long":                (1, 8),
          "enumerate_connected_graphs": (1, 8),
          "check_lemmas":               (1, 10),
          "bad_order_search":           (0, 12)}

def check_accepted(name: str, value: int) -> None:
    """Raises GraphSizeError if value is outside the accepted range for name"""
    if name not in LIMITS.keys():
        raise KeyError(f"No accepted range present for '{name}'")
    low, high = LIMITS[name]
    if value < low or value > high:
        raise GraphSizeError(f"'{value}' is not in range {LIMITS[name]} for {name}.")


class LoggedSearch(metaclass=ABCMeta):
    """A base class for long running searches that keep a plain text trace.
       Every call to log appends one line to log_str; with loud=True the line
       is also printed to stderr so that stdout stays machine readable."""
    def __init__(self, loud: bool=False):
        self.loud = loud
        self.log_str: str = ""

    def log(self, value: str, err: bool=False, err_str: str=None) -> None:
        """Logs one line of search activity, and notes if it was a failure"""
        value = value.rstrip("\n")
        if err:
            value = value + f" [FAILED - '{err_str}']"
        self.log_str += value + "\n"
        if self.loud:
            print(value, file=sys.stderr)
