from chordalnet.utils.env import DEFAULT_PRIME, default_prime, env_int, load_env_defaults


def test_env_file_fills_missing_keys_only(tmp_path, monkeypatch):
    env = tmp_path / ".env"
    env.write_text('# defaults\nexport CHORDALNET_PRIME=13\nCHORDALNET_SEED="9"\nnot a pair\n')
    # setenv first so monkeypatch restores the variable load_env_defaults writes
    monkeypatch.setenv("CHORDALNET_PRIME", "0")
    monkeypatch.delenv("CHORDALNET_PRIME")
    monkeypatch.setenv("CHORDALNET_SEED", "1")
    assert load_env_defaults(env) == {"CHORDALNET_PRIME": "13"}
    assert default_prime() == 13
    assert env_int("CHORDALNET_SEED") == 1


def test_bad_values_fall_back(monkeypatch):
    monkeypatch.setenv("CHORDALNET_PRIME", "lots")
    assert default_prime() == DEFAULT_PRIME
    assert env_int("CHORDALNET_UNSET_KEY", 5) == 5
