import functools

ACCEPTANCE = []


def criterion(number, title):
    """Record a pass/fail line for an acceptance criterion, printed in the terminal summary."""

    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                ACCEPTANCE.append((number, title, False, f"{type(exc).__name__}: {exc}".splitlines()[0]))
                raise
            ACCEPTANCE.append((number, title, True, ""))

        return inner

    return wrap


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(ACCEPTANCE):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
