import io
import os

import pytest

from cyclolib import io_cyclo
from cyclolib.errors import CheckpointParseError, CycloWarning
from cyclolib.search import SearchTask, build_report, run_task


def small_report():
    tasks = [run_task(SearchTask(3, 5, rho), snapshot=0, prune=True, cap=10**6) for rho in (1, 2, 4, 7)]
    tasks.append(SearchTask(3, 7, 1, status='exhausted'))
    return build_report(3, 7, tasks)


def test_default_checkpoint_path(checkpoint_dir, monkeypatch):
    assert io_cyclo.default_checkpoint_path(7, 100) == os.path.join(str(checkpoint_dir), 'search_p7_q100.jsonl')
    monkeypatch.delenv(io_cyclo.CHECKPOINT_DIR_ENV)
    assert io_cyclo.default_checkpoint_path(7, 100) is None


def test_checkpoint_write_and_read(tmp_path):
    path = str(tmp_path / 'c.jsonl')
    assert io_cyclo.read_checkpoint(path) == ([], None)

    empty = tmp_path / 'empty.jsonl'
    empty.write_text('')
    assert io_cyclo.read_checkpoint(str(empty)) == ([], 0)

    task = run_task(SearchTask(3, 5, 7), snapshot=0, prune=True, cap=10**6)
    with io_cyclo.CheckpointWriter(path) as writer:
        writer.append(task.to_record())
        writer.append(SearchTask(3, 5, 1, status='exhausted').to_record())

    with open(path) as fh:
        first = fh.readline()
    assert first == '{"p":3,"q":5,"rho":7,"r":7,"status":"computed","value":2,"bound":2,"bound_rule":"bzdega"}\n'

    records, keep = io_cyclo.read_checkpoint(path)
    assert [n for n, _ in records] == [1, 2]
    assert records[1][1]['r'] is None
    assert keep == os.path.getsize(path)


def test_partial_tail_is_dropped(tmp_path):
    path = tmp_path / 'c.jsonl'
    path.write_text('{"p":3,"q":5,"rho":1,"r":null,"status":"exhausted","value":null,"bound":null,'
                    '"bound_rule":null}\n{"p":3,"q"')

    with pytest.warns(CycloWarning, match='incomplete final line 2'):
        records, keep = io_cyclo.read_checkpoint(str(path))
    assert len(records) == 1

    with io_cyclo.CheckpointWriter(str(path), keep) as writer:
        writer.append(SearchTask(3, 5, 2, status='exhausted').to_record())

    lines = path.read_text().split('\n')
    assert len(lines) == 3 and lines[-1] == ''
    assert '"rho":2' in lines[1]


@pytest.mark.parametrize('text, reason', [
    ('not json\n', 'invalid JSON'),
    ('[1, 2]\n', 'expected fields'),
    ('{"p":"3","q":5,"rho":1,"r":null,"status":"x","value":null,"bound":null,"bound_rule":null}\n', 'p must'),
    ('{"p":3,"q":5,"rho":1,"r":null,"status":"bogus","value":null,"bound":null,"bound_rule":null}\n',
     'status must'),
    ('{"p":3,"q":5,"rho":1,"r":null,"status":"pending","value":null,"bound":null,"bound_rule":null}\n',
     'status must'),
    ('{"p":3,"q":5,"rho":1,"r":"29","status":"exhausted","value":null,"bound":null,"bound_rule":null}\n',
     'r must'),
    ('{"p":3,"q":5,"rho":1,"r":29,"status":"computed","value":null,"bound":1,"bound_rule":"kaplan_one"}\n',
     'value must be an integer when computed'),
    ('{"p":3,"q":5,"rho":1,"r":29,"status":"pruned","value":true,"bound":1,"bound_rule":"kaplan_one"}\n',
     'value must be an integer when pruned'),
    ('{"p":3,"q":5,"rho":1,"r":null,"status":"pruned","value":1,"bound":1,"bound_rule":"kaplan_one"}\n',
     'r must be an integer when pruned'),
    ('{"p":3,"q":5,"rho":1,"r":29,"status":"computed","value":1,"bound":1,"bound_rule":null}\n',
     'bound_rule must'),
])
def test_bad_records(tmp_path, text, reason):
    path = tmp_path / 'c.jsonl'
    path.write_text('\n' + text)
    with pytest.raises(CheckpointParseError, match=reason) as excinfo:
        io_cyclo.read_checkpoint(str(path))
    assert excinfo.value.line_number == 2


def test_csv_report():
    buf = io.StringIO()
    io_cyclo.write_report(small_report(), 'csv', buf)
    lines = buf.getvalue().splitlines()

    assert lines[0] == 'p,q,rho,r,height,bound,rule'
    assert lines[4] == '3,5,7,7,2,2,bzdega'
    assert lines[5] == '3,7,1,,,,'
    assert len(lines) == 6


def test_text_report():
    buf = io.StringIO()
    io_cyclo.write_report(small_report(), 'text', buf)
    lines = buf.getvalue().splitlines()

    assert lines[3] == '3 5 7 7 2 2 bzdega'
    assert lines[4] == '3 7 1 - - - -'
    assert '# max height 2 from 4 computed, 0 pruned, 1 exhausted' in lines
    assert lines[-1] == '# witness 3 5 7'


def test_structured_report():
    buf = io.StringIO()
    io_cyclo.write_report(small_report(), 'structured', buf)
    text = buf.getvalue()

    assert text.startswith('# %ECSV')
    assert 'max_height: 2' in text
    assert 'p q rho r height bound rule' in text


def test_rows_are_stable():
    rows = [[0, 1], [1, -1]]
    outputs = set()
    for _ in range(2):
        buf = io.StringIO()
        io_cyclo.write_rows(['exponent', 'coefficient'], rows, 'structured', buf)
        outputs.add(buf.getvalue())
    assert len(outputs) == 1


def test_parser():
    parser = io_cyclo.make_parser()

    p = parser.parse_args(['--verbosity', '2', 'search', '7', '--qmax', '50', '--no-prune'])
    assert (p.command, p.p, p.qmax, p.no_prune, p.verbosity, p.format) == ('search', 7, 50, True, 2, 'text')

    p = parser.parse_args(['ternary', '3', '5', '7', '--coeff', '-1'])
    assert p.coeff == -1 and not p.vector

    with pytest.raises(SystemExit) as excinfo:
        parser.parse_args(['ternary', '3', '5', '7', '--coeff', '1', '--vector'])
    assert excinfo.value.code == 1

    with pytest.raises(SystemExit):
        parser.parse_args(['bounds', '3', '5', '9'])
