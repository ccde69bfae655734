import powergenus.cli as cli
import powergenus.powergraph as pg


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_group_info(capsys):
    code, out, _ = run(capsys, "group-info", "[16,9]", "--no-timestamp")
    assert code == 0
    assert "order:        16" in out and "{1,2,4,8}" in out


def test_group_info_recipe_records(capsys):
    code, out, _ = run(capsys, "group-info", "direct(cyclic(2),cyclic(6))",
                       "--format", "records", "--no-timestamp")
    assert code == 0
    assert "six=(3;3,3,3)" in out


def test_unknown_label_errors(capsys):
    code, _, err = run(capsys, "group-info", "[999,9]", "--no-timestamp")
    assert code == 1 and "error" in err


def test_powergraph_edges(capsys):
    code, out, _ = run(capsys, "powergraph", "cyclic(8)", "--no-timestamp")
    assert code == 0
    assert out.splitlines()[0] == "8 28"


def test_powergraph_dot(capsys):
    code, out, _ = run(capsys, "powergraph", "cyclic(6)", "--dot",
                       "--no-timestamp")
    assert code == 0 and out.startswith("graph")


def test_genus_exact_and_verify(tmp_path, capsys):
    edge_file = tmp_path / "k5.edges"
    edge_file.write_text(pg.to_edge_list(pg.complete_graph(5)))
    cert = tmp_path / "k5.cert"
    code, out, _ = run(capsys, "genus", str(edge_file), "--certificate",
                       str(cert), "--no-timestamp")
    assert code == 0 and "genus exact 1" in out
    code, out, _ = run(capsys, "verify", str(cert), "--no-timestamp")
    assert code == 0 and out.startswith("verified")


def test_genus_nonorientable(tmp_path, capsys):
    edge_file = tmp_path / "k33.edges"
    edge_file.write_text(pg.to_edge_list(pg.complete_bipartite(3, 3)))
    code, out, _ = run(capsys, "genus", str(edge_file), "--nonorientable",
                       "--no-timestamp")
    assert code == 0 and "crosscap exact 1" in out


def test_genus_bounds_exit_code(tmp_path, capsys):
    edge_file = tmp_path / "k8.edges"
    edge_file.write_text(pg.to_edge_list(pg.complete_graph(8)))
    code, out, _ = run(capsys, "genus", str(edge_file), "--budget-nodes", "50",
                       "--no-timestamp")
    assert code == 2 and "bounds" in out


def test_classify_single(capsys):
    code, out, _ = run(capsys, "classify", "[24,8]", "--no-timestamp")
    assert code == 0
    assert "orientable:    two (Table 1 label [24,8])" in out
    assert "trail:" in out


def test_classify_all_deterministic(capsys):
    code, out1, _ = run(capsys, "classify", "--all-catalog", "--jobs", "4",
                        "--format", "records", "--no-timestamp")
    assert code == 0 and len(out1.splitlines()) == 56
    code, out2, _ = run(capsys, "classify", "--all-catalog", "--jobs", "1",
                        "--format", "records", "--no-timestamp")
    assert out1 == out2


def test_report_table1(capsys):
    code, out, _ = run(capsys, "report", "table1", "--no-timestamp")
    rows = out.strip().splitlines()
    assert code == 0 and len(rows) == 11
    assert rows[0].startswith("[8,1]")
    assert rows[-1].startswith("[72,43]")


def test_report_table2(capsys):
    code, out, _ = run(capsys, "report", "table2", "--no-timestamp")
    rows = out.strip().splitlines()
    assert code == 0 and len(rows) == 7
    assert all("pairwise3=yes" in r for r in rows)


def test_report_lemma(capsys):
    code, out, _ = run(capsys, "report", "lemma", "L3.1", "--no-timestamp")
    assert code == 0
    assert "PASS: 0 witnesses in 24 groups scanned" in out


def test_report_lemma_unknown(capsys):
    code, _, err = run(capsys, "report", "lemma", "L9.9", "--no-timestamp")
    assert code == 1 and "error" in err


def test_custom_catalog(tmp_path, capsys):
    path = tmp_path / "mini.catalog"
    path.write_text("[8,1] | cyclic(8) | 8 | 1,2,4,8 | table1\n")
    code, out, _ = run(capsys, "classify", "--all-catalog", "--catalog",
                       str(path), "--format", "records", "--no-timestamp")
    assert code == 0 and len(out.strip().splitlines()) == 1
    assert "label=[8,1]" in out


def test_timestamp_header(capsys):
    _, out, _ = run(capsys, "report", "table2")
    assert out.startswith("# generated ")
