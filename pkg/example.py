from aoi_tradeoff import (
    ArrivalProcess,
    PolicyConfig,
    SimSettings,
    lcfsp_age,
    make_distribution,
    mg1_lcfsp_delay,
    run,
)
from aoi_tradeoff.experiments import SweepSpec, tradeoff_sweep
from aoi_tradeoff.utils import setup_logger


if __name__ == "__main__":
    setup_logger("aoi_tradeoff", "info")
    arrival = ArrivalProcess.poisson(0.5)

    for service in (
        make_distribution("exponential", 0.8),
        make_distribution("pareto", 0.8, 1.1),
        make_distribution("lognormal", 0.8, 4.0),
    ):
        print("{}: age {:.4f} delay {:.4f}".format(
            service, lcfsp_age(arrival, service), mg1_lcfsp_delay(arrival, service)
        ))

    result = run(arrival, make_distribution("exponential", 0.8), PolicyConfig.lcfsp(), horizon=1e5, seed=0)
    print("simulated M/M/1 LCFSp age", result.avg_age)

    settings = SimSettings(horizon=1e5, warmup=1e4, reps=2)
    spec = SweepSpec(arrival, "pareto", [3.0, 2.0, 1.5, 1.1], [PolicyConfig.lcfsp()], 0.8, settings)
    for point in tradeoff_sweep(spec):
        print(point.to_row())
