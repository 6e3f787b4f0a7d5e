"""The 260-day Tonalpohualli as the group Z13 x Z20."""
from .action import Orbit, Translation, act_on_daynumber, apply, orbit, orbit_restrict, shift_amount, solve_translation
from .calendar import SIGNS, DayName, ParseError, SignTable, add_names, display_daynumber, display_name, ell, iota, parse_name
from .modular import CrtSystem, Residue, crt_solve, mod_inverse, reduce
from .permutation import Permutation, cycle_decomposition, generate_cyclic, order, parity, sigma
from .structure import Orientation, orientation_of_day, oriented_trecena_signs, trecena_of, veintena_of

__version__ = "0.1.0"
