from pygoodgraphs.graph_core import Graph, from_edge_list, from_graph6, to_graph6, induced, canonical_form
from pygoodgraphs.colouring import VertexOrder, Colouring, greedy_colour, greedy_colour_start2, chromatic_number
from pygoodgraphs.order_search import GoodnessVerdict, GoodnessOracle, find_bad_connected_order, gamma_c
from pygoodgraphs.order_search import is_good, is_minimally_bad
from pygoodgraphs.obstruction_catalog import Family, ObstructionSpec, PrismSpec, generate, is_good_clawfree
from pygoodgraphs.minbad_lab import census, check_lemmas, enumerate_connected_graphs
