import threading

import pytest
import requests

from peglab.service import Service


@pytest.fixture(scope="module")
def server():
    svc = Service(port=0)
    thread = threading.Thread(target=svc.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{svc.port}"
    svc.shutdown()


def test_health(server):
    r = requests.get(server + "/api/health")
    assert r.status_code == 200 and r.json() == {"ok": True}


def test_grundy_endpoint(server):
    r = requests.post(server + "/api/grundy",
                      json={"board": "0110", "variant": "single", "mode": "fixed"})
    assert r.json() == {"grundy": 1, "isP": False}


def test_solve_unsolvable_pair(server):
    r = requests.post(server + "/api/solve", json={"board": "11"})
    body = r.json()
    assert body["solvable"] is False and body["minPegs"] == 2


def test_solve_returns_replayable_moves(server):
    r = requests.post(server + "/api/solve", json={"board": "110011"})
    body = r.json()
    assert body["solvable"] and body["minPegs"] == 1
    board = list("110011")
    for record in body["moves"]:
        for hop in record["hops"]:
            assert board[hop["from"]] == "1" and board[hop["over"]] == "1"
            assert board[hop["to"]] == "0"
            board[hop["from"]] = board[hop["over"]] = "0"
            board[hop["to"]] = "1"
        assert "".join(board) == record["resultBoard"]
    assert board.count("1") == 1


def test_options_match_generators_and_replay(server):
    r = requests.post(server + "/api/options",
                      json={"board": "11", "variant": "multi", "mode": "open"})
    opts = r.json()["options"]
    assert len(opts) == 2
    for option in opts:
        delta = option["offsetDelta"]
        board = list("0" * -delta + "11")
        board += ["0"] * (len(option["resultBoard"]) - len(board))
        for hop in option["move"]["hops"]:
            f, o, t = (hop[k] - delta for k in ("from", "over", "to"))
            board[f] = board[o] = "0"
            board[t] = "1"
        assert "".join(board) == option["resultBoard"]
        assert option["grundy"] == 0 and option["isP"] is True


def test_options_on_padded_open_board_use_request_coordinates(server):
    r = requests.post(server + "/api/options",
                      json={"board": "00110", "variant": "single", "mode": "open"})
    opts = r.json()["options"]
    assert {tuple(h.values()) for o in opts for h in o["move"]["hops"]} \
        == {(2, 3, 4), (3, 2, 1)}
    for option in opts:
        delta = option["offsetDelta"]
        assert delta == 0  # hops stay inside the request text here
        board = list("00110")
        board += ["0"] * (len(option["resultBoard"]) - len(board))
        for hop in option["move"]["hops"]:
            board[hop["from"]] = board[hop["over"]] = "0"
            board[hop["to"]] = "1"
        assert "".join(board) == option["resultBoard"]


def test_open_board_leftward_extension(server):
    r = requests.post(server + "/api/options",
                      json={"board": "011", "variant": "single", "mode": "open"})
    opts = r.json()["options"]
    hops = {tuple(h.values()) for o in opts for h in o["move"]["hops"]}
    assert hops == {(1, 2, 3), (2, 1, 0)}
    by_delta = {o["offsetDelta"]: o for o in opts}
    assert set(by_delta) == {0}
    assert {o["resultBoard"] for o in opts} == {"0001", "100"}


def test_best_on_p_position_conflicts(server):
    r = requests.post(server + "/api/best",
                      json={"board": "1111", "variant": "multi", "mode": "open"})
    assert r.status_code == 409
    assert r.json() == {"error": "no winning move"}


def test_best_moves_all_reach_zero(server):
    r = requests.post(server + "/api/best",
                      json={"board": "0110", "variant": "single", "mode": "fixed"})
    moves = r.json()["moves"]
    assert len(moves) == 2
    for record in moves:
        check = requests.post(server + "/api/grundy",
                              json={"board": record["resultBoard"],
                                    "variant": "single", "mode": "fixed"})
        assert check.json()["grundy"] == 0


def test_facade_adds_no_arithmetic(server):
    from peglab.board import BoardMode, GameVariant
    from peglab.duotaire import MemoStore, grundy_word
    from peglab.solver import min_pegs
    from tests.conftest import fixed

    store = MemoStore()
    for board in ("110110", "1011", "011010"):
        for variant in ("single", "multi"):
            got = requests.post(server + "/api/grundy",
                                json={"board": board, "variant": variant,
                                      "mode": "fixed"}).json()
            want = grundy_word(board, GameVariant(variant), BoardMode.FIXED,
                               store)
            assert got["grundy"] == want and got["isP"] == (want == 0)
        got = requests.post(server + "/api/solve", json={"board": board}).json()
        assert got["minPegs"] == min_pegs(fixed(board))[0]


def test_concurrent_requests(server):
    import concurrent.futures

    boards = ["110110", "1011", "11011", "101101", "111011"] * 4

    def ask(board):
        r = requests.post(server + "/api/grundy",
                          json={"board": board, "variant": "multi",
                                "mode": "fixed"})
        return board, r.json()["grundy"]

    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(ask, boards))
    by_board = {}
    for board, value in results:
        assert by_board.setdefault(board, value) == value


def test_malformed_requests(server):
    r = requests.post(server + "/api/grundy",
                      json={"board": "01x", "variant": "single", "mode": "fixed"})
    assert r.status_code == 400 and "error" in r.json()
    r = requests.post(server + "/api/grundy",
                      json={"board": "011", "variant": "triple", "mode": "fixed"})
    assert r.status_code == 400
    r = requests.post(server + "/api/solve", json={"board": "000"})
    assert r.status_code == 400
    r = requests.post(server + "/api/nothing", json={})
    assert r.status_code == 404


def test_cache_persistence(tmp_path):
    path = str(tmp_path / "grundy.cache")
    svc = Service(port=0, cache_path=path)
    thread = threading.Thread(target=svc.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{svc.port}"
    requests.post(base + "/api/grundy",
                  json={"board": "110110", "variant": "multi", "mode": "fixed"})
    svc.shutdown()
    lines = open(path).read().splitlines()
    assert lines and all(line.startswith("m|f|") for line in lines)

    # a warmed cache returns identical values
    from peglab.board import BoardMode, GameVariant
    from peglab.duotaire import MemoStore, grundy_word

    expect = grundy_word("110110", GameVariant.MULTI_HOP, BoardMode.FIXED,
                         MemoStore())
    svc2 = Service(port=0, cache_path=path)
    thread = threading.Thread(target=svc2.serve_forever, daemon=True)
    thread.start()
    base2 = f"http://127.0.0.1:{svc2.port}"
    r = requests.post(base2 + "/api/grundy",
                      json={"board": "110110", "variant": "multi", "mode": "fixed"})
    svc2.shutdown()
    assert r.json()["grundy"] == expect


def test_env_var_overrides_cache_path(tmp_path, monkeypatch):
    env_path = str(tmp_path / "env.cache")
    monkeypatch.setenv("PEGLAB_CACHE", env_path)
    svc = Service(port=0, cache_path=str(tmp_path / "flag.cache"))
    assert svc.cache_path == env_path
    svc.shutdown()
