"""Ribbon graphs of link diagrams: Tait graphs, state graphs, partial
duals, Seifert graphs, and r-fold parallels."""

from .errors import (RibbonlinkError, NotPermutation, FixedPointAlpha,
                     WeightCoverage, UnknownEdge, LabelNotTwice,
                     NonOrientable, BudgetExceeded, ArcCount, NonPlanar,
                     Disconnected, BadOrientation, NotPlane, NotEulerian,
                     BadR)
from .maps import (CombinatorialMap, Weight, ArrowPresentation, build_map,
                   from_arrow_presentation, map_equal, map_isomorphic)
from .multigraph import AbstractMultigraph
from .diagrams import (LinkDiagram, parse_pd, checkerboard,
                       CheckerboardColoring, crossing_signs, tait_graph,
                       state_ribbon_graph, state_dual_set, canonical_states,
                       seifert_data, parse_state)
from .seifert import (cd_labeling, overlay_pair, build_phi, PhiGraph,
                      region_dual,
                      verify_seifert_characterization, reconstruct_link,
                      remark_identity_check)
from .parallels import (parallel_diagram, induced_state, parallel_tait,
                        verify_overlay_recurrence, check_sign_projection,
                        induced_A_r, parallel_genus_report,
                        corollary_ca2_checks, turaev_upper_bound)
from .catalog import CATALOG, load as load_catalog

__version__ = "0.1.0"
