from src.burstflow.bursts import DEFAULT_WINDOW_S, Burst, Pnl, group_bursts, pnl_of
from src.burstflow.clusters import Cluster, cluster_by_pnl, subtract, wildcard_only
from src.burstflow.stats import HISTOGRAM_BUCKETS, FleetStats, fleet_stats
