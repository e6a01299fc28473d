"""Registry of acceptance-criterion outcomes, echoed after the test run."""

LINES: list[str] = []


def record(line: str) -> None:
    LINES.append(line)
    print(line)
