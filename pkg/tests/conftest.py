def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        res = RESULTS[number]
        terminalreporter.write_line(f"{res.line()}  ({res.seconds:.2f}s)")
