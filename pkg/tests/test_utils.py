import datetime

from mlat.utils import (
    is_submask,
    mask_of,
    members,
    popcount,
    seconds_to_hms,
    timestamp,
)


def test_seconds_to_hms():
    """
    Test mlat.utils.seconds_to_hms
    """
    assert seconds_to_hms(0) == '00:00:00'
    assert seconds_to_hms(59.9) == '00:00:59'
    assert seconds_to_hms(3725) == '01:02:05'


def test_timestamp():
    """
    Test mlat.utils.timestamp
    """
    t = datetime.datetime.fromisoformat(timestamp())
    assert t.utcoffset() is not None


def test_masks():
    """
    Test mlat.utils mask helpers
    """
    m = mask_of([0, 2, 5])
    assert m == 0b100101
    assert list(members(m)) == [0, 2, 5]
    assert popcount(m) == 3
    assert is_submask(mask_of([2]), m)
    assert not is_submask(mask_of([1]), m)
