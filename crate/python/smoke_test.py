"""Smoke test for the fermijack Python module.

Build and install first, for example with
    maturin develop -m crates/python/Cargo.toml
then run
    python python/smoke_test.py
"""

import fermijack


def main() -> None:
    assert fermijack.hd_energy([2, 2, 1, 1]) == 20
    assert fermijack.energy("cs", [1, 1]) == "2-4*b^2"
    assert fermijack.check_identity("theorem4", [4, 3, 1])

    state = fermijack.jack("cs", [1, 1])
    assert state["energy_text"] == "2-4*b^2"
    assert [t["index"] for t in state["vector"]] == [[1, 1]]

    specialized = fermijack.jack("cs", [2], beta="1/3", basis="powersum")
    assert specialized["beta"] == "1/3"
    assert specialized["energy_text"] == "10/3"

    try:
        fermijack.jack("cs", [2], beta="-1")
    except fermijack.ResonanceError as e:
        assert "2+2β" in str(e)
    else:
        raise AssertionError("expected a resonance at b^2 = -1")

    energies = [s["energy_text"] for s in fermijack.spectrum("cs", 2)]
    assert energies == ["4-2*b^2", "2-4*b^2"]

    assert fermijack.latex("cs", [2], basis="schur").startswith("s_{2}")

    omega = fermijack.halperin([1], [1])
    assert omega["model"] == "halperin" and len(omega["vector"]) > 1

    try:
        fermijack.jack("cs", [1, 2])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for a non-partition")

    print("fermijack smoke test passed")


if __name__ == "__main__":
    main()
