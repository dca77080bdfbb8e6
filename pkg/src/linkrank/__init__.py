"""Link-analysis ranking: PageRank, Weighted PageRank, HITS, distance ranking and EigenRumor."""

from linkrank.compare import Ranking, kendall_tau, to_ranking
from linkrank.distance import DistanceVector, distance_rank
from linkrank.eigenrumor import AgentObjectGraph, EigenRumorScores, build_agent_object_graph, eigenrumor
from linkrank.errors import (
    DegenerateVectorError,
    EdgeListError,
    GraphError,
    LinkRankError,
    NonFiniteScoreError,
)
from linkrank.graph import DirectedGraph, NodeRef, backlinks, build_graph, parse_edge_list, references
from linkrank.hits import HubAuthScores, expand_root_set, hits
from linkrank.pagerank import DanglingPolicy, normalized_pagerank, pagerank
from linkrank.solver import IterationTrace, RankVector, SolverConfig, UpdateMode, iterate
from linkrank.weighted import LinkWeightTable, in_weight, link_weights, out_weight, weighted_pagerank, wpr_update

__version__ = "0.1.0"
