from .active_volume import (
    AV_STAGE_KEYS,
    SCENARIO_DIR,
    av_cycles,
    av_scale_scenario,
    av_stage_table,
    av_time,
    av_time_exact,
    av_total,
    compare_totals,
    load_scenario,
    packaged_scenario_paths,
)

__all__ = [
    "AV_STAGE_KEYS",
    "SCENARIO_DIR",
    "av_cycles",
    "av_scale_scenario",
    "av_stage_table",
    "av_time",
    "av_time_exact",
    "av_total",
    "compare_totals",
    "load_scenario",
    "packaged_scenario_paths",
]
