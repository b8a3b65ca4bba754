"""Online algorithms driven by a slot-by-slot simulation."""

from .general import GeneralPolicy, NiceJob, alg_general, convert, relax_offset, relax_sch, shrink_sch
from .greedy import SlotJob, greedy, slot_cost, slot_loads
from .horizontal import FIRST_FIT, NEXT_FIT, ADPolicy, UUPolicy, alg_ad, alg_uu
from .sim import OnlineContext, Simulation, run_online
from .uniform import AlignedJob, UVPolicy, align_fi, align_sch, alg_uv, free_sch, is_tight
from .vertical import VPolicy, alg_v

__all__ = [
    "ADPolicy", "AlignedJob", "FIRST_FIT", "GeneralPolicy", "NEXT_FIT", "NiceJob", "OnlineContext",
    "Simulation", "SlotJob", "UUPolicy", "UVPolicy", "VPolicy", "alg_ad", "alg_general", "alg_uu",
    "alg_uv", "alg_v", "align_fi", "align_sch", "convert", "free_sch", "greedy", "is_tight",
    "relax_offset", "relax_sch", "run_online", "shrink_sch", "slot_cost", "slot_loads",
]
