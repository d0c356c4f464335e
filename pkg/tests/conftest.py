from hypothesis import HealthCheck, settings

# One deterministic profile for the whole suite: examples are derived from
# the test itself, so every run sees the same cases.
settings.register_profile(
    "deterministic",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("deterministic")
