from hypothesis import HealthCheck, settings

# One deterministic profile for every module: property tests must not flake
# in CI, and a few of them drive full enumerator runs that trip the default
# per-example deadline on slow machines.
settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")
