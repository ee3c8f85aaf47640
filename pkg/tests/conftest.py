import pytest

# criterion number -> (title, [(check, ok)]), filled by tests/test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, list[tuple[str, bool]]]] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, check: str, ok: bool) -> None:
        ACCEPTANCE.setdefault(number, (title, []))[1].append((check, ok))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, checks = ACCEPTANCE[number]
        red = [c for c, ok in checks if not ok]
        verdict = "FAIL" if red else "PASS"
        detail = f"{len(checks) - len(red)}/{len(checks)} checks"
        terminalreporter.write_line(f"{verdict}  {number}. {title} ({detail})")
        for check in red:
            terminalreporter.write_line(f"        red: {check}")
