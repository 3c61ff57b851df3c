import pytest

from aoi_tradeoff.exceptions import ConfigError
from aoi_tradeoff.simcore import PolicyConfig, PolicyKind, Preemption

def test_labels():
    assert PolicyConfig.parse("lcfsp") == PolicyConfig.lcfsp()
    assert PolicyConfig.parse("lcfsp_restart").preemption is Preemption.RESTART
    assert PolicyConfig.parse("fcfs") == PolicyConfig.fcfs_single()
    assert PolicyConfig.parse("fcfs_pool:4") == PolicyConfig.fcfs_pool(4)
    assert PolicyConfig.parse("fcfs_pool_4") == PolicyConfig.fcfs_pool(4)
    assert PolicyConfig.parse("infinite").kind is PolicyKind.INFINITE_SERVER
    for policy in (PolicyConfig.lcfsp(), PolicyConfig.fcfs_pool(3), PolicyConfig.infinite_server()):
        assert PolicyConfig.parse(policy.label) == policy
        assert PolicyConfig.parse(policy.to_config()) == policy

def test_mappings():
    assert PolicyConfig.parse({"kind": "fcfs_pool", "servers": 2}) == PolicyConfig.fcfs_pool(2)
    assert PolicyConfig.parse({"kind": "fcfs_pool"}) == PolicyConfig.fcfs_single()
    assert PolicyConfig.parse({"kind": "lcfsp", "preemption": "restart"}) == PolicyConfig.lcfsp(Preemption.RESTART)

@pytest.mark.parametrize("value, field", [
    ("round_robin", "kind"),
    ({"kind": "fcfs_pool", "servers": 0}, "servers"),
    ({"kind": "lcfsp", "servers": 2}, "servers"),
    ({"kind": "fcfs", "preemption": "restart"}, "preemption"),
    ({"kind": "lcfsp", "preemption": "pause"}, "preemption"),
    ({"kind": "lcfsp", "priority": 1}, "priority"),
    ({"servers": 2}, "kind"),
])
def test_invalid(value, field):
    with pytest.raises(ConfigError) as error:
        PolicyConfig.parse(value)
    assert error.value.field == field

def test_hash():
    assert PolicyConfig.fcfs_pool(2).consistent_hash() == PolicyConfig.parse("fcfs_pool:2").consistent_hash()
    assert PolicyConfig.fcfs_pool(2).consistent_hash() != PolicyConfig.fcfs_pool(3).consistent_hash()
