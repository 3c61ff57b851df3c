import pytest
from aoi_tradeoff.utils import parse_duration

def test_parse_duration():
    assert parse_duration(0) == 0
    assert parse_duration(1) == 1
    assert parse_duration(1.0) == 1.0

    assert parse_duration("1s") == 1
    assert parse_duration("5m") == 300
    assert parse_duration("1h") == 3600
    assert parse_duration("1d") == 86400
    assert parse_duration("1w") == 604800
    assert parse_duration("1d12h") == 129600
    assert parse_duration("1h 30m") == 5400

    assert parse_duration(-1) is None
    assert parse_duration(None) is None
    assert parse_duration("") is None

    with pytest.raises(ValueError):
        parse_duration("el burro loco")
