import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for result in sorted(RESULTS, key=lambda r: r.number):
        terminalreporter.write_line(result.line())
    passed = sum(r.passed for r in RESULTS)
    terminalreporter.write_line(f"{passed}/{len(RESULTS)} criteria passed")
