from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
