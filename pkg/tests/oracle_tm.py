"""Reference single-tape Turing machine simulator.

Written against integer tape positions and a plain (state, symbol) -> action
dict, on purpose: it shares no code or data representation with the package's
paired-string configurations, so agreement on verdicts and step counts is a
real cross-check rather than a tautology.

Semantics mirrored here:
  * the tape is blank at position 0, the input occupies positions 1..n,
    and cells are allocated rightward on demand;
  * a left move at position 0 never applies (the table entry is ignored,
    as if no instruction matched);
  * the machine halts when no table entry applies; it accepts iff it halts
    in state "h" reading a blank at either the left edge (position 0) or
    the right edge (the highest allocated cell).
"""

BLANK = "△"

ACCEPTED = "accepted"
HALTED_REJECTED = "halted-rejected"
BUDGET_EXCEEDED = "budget-exceeded"


def oracle_run(table, text, budget=100_000):
    """Run `table` on `text`; return (verdict, steps, final_string).

    `table` maps (state, read_symbol) to (next_state, write_symbol, move)
    with move in {"L", "R"}. `steps` counts applied transitions. The final
    string is the allocated tape with blank ends stripped.
    """
    tape = {i + 1: ch for i, ch in enumerate(text)}
    head = 0
    rightmost = len(text)
    state = "q0"
    steps = 0
    while True:
        symbol = tape.get(head, BLANK)
        action = table.get((state, symbol))
        if action is not None and action[2] == "L" and head == 0:
            action = None
        if action is None:
            at_edge = head == 0 or head == rightmost
            accepted = state == "h" and symbol == BLANK and at_edge
            verdict = ACCEPTED if accepted else HALTED_REJECTED
            break
        if steps >= budget:
            verdict = BUDGET_EXCEEDED
            break
        next_state, write, move = action
        tape[head] = write
        head += 1 if move == "R" else -1
        if head > rightmost:
            rightmost = head
        state = next_state
        steps += 1
    content = "".join(tape.get(i, BLANK) for i in range(rightmost + 1))
    return verdict, steps, content.strip(BLANK)


def oracle_accepts(table, text, budget=100_000):
    return oracle_run(table, text, budget)[0] == ACCEPTED
