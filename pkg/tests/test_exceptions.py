from trilist.models.exceptions import TrilistException, EdgeListParseError, GuardExceeded


def test_exception_str_and_repr():
    exc = TrilistException(message='the-message')
    assert 'the-message' in str(exc)
    assert 'the-message' in repr(exc)


def test_edge_list_error_keeps_the_line():
    exc = EdgeListParseError(3, 'a b')
    assert exc.line_number == 3
    assert "'a b'" in str(exc)


def test_guard_error_reports_both_sizes():
    exc = GuardExceeded('Vertex count', 14, 11)
    assert exc.actual == 14
    assert exc.limit == 11
    assert '14' in str(exc) and '11' in str(exc)
