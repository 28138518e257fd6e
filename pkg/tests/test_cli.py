import shutil

from conftest import fixture_path

from cglint.cli import main
from cglint.report import from_xml


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run(tmp_path, *args):
    xml_out = str(tmp_path / "vfresults.xml")
    return main(list(args) + ["--xml-out", xml_out, "--timestamp", "t"]), xml_out


def test_clean_run_exits_zero(tmp_path):
    src = write(tmp_path, "clean.cpp", "namespace app { class Neat { }; }\n")
    code, xml_out = run(tmp_path, "--lang", "minicpp", src)
    assert code == 0
    results = from_xml(open(xml_out, "rb").read())
    assert results.total_findings() == 0
    assert len(results.reports) == 18


def test_shall_finding_exits_one(tmp_path):
    src = write(tmp_path, "leak.cpp", "void f() { int* p = new int; }\n")
    code, xml_out = run(tmp_path, "--lang", "minicpp", src)
    assert code == 1
    results = from_xml(open(xml_out, "rb").read())
    by_id = {r.descriptor.id: r for r in results.reports}
    assert len(by_id["MemoryChecker"].findings) == 1


def test_should_finding_exits_zero_without_strict(tmp_path):
    src = write(tmp_path, "t.cpp", "namespace app { typedef int Alpha; }\n")
    code, _ = run(tmp_path, "--lang", "minicpp", src)
    assert code == 0


def test_strict_turns_any_finding_into_failure(tmp_path):
    src = write(tmp_path, "t.cpp", "namespace app { typedef int Alpha; }\n")
    code, _ = run(tmp_path, "--lang", "minicpp", "--strict", src)
    assert code == 1


def test_parse_error_exits_two_but_writes_xml(tmp_path):
    src = write(tmp_path, "broken.cpp", "class {")
    code, xml_out = run(tmp_path, "--lang", "minicpp", src)
    assert code == 2
    results = from_xml(open(xml_out, "rb").read())
    assert results.files == [src]


def test_unknown_language_exits_two(tmp_path, capsys):
    code, _ = run(tmp_path, "--lang", "cobol")
    assert code == 2
    assert "cobol" in capsys.readouterr().err


def test_bad_config_exits_two(tmp_path):
    src = write(tmp_path, "t.cpp", "int main() { return 0; }\n")
    config = write(tmp_path, "rules.cfg", "[rule Phantom]\nenabled = true\n")
    code, _ = run(tmp_path, "--lang", "minicpp", "--config", config, src)
    assert code == 2


def test_config_disables_rule(tmp_path):
    src = write(tmp_path, "leak.cpp", "void f() { int* p = new int; }\n")
    config = write(tmp_path, "rules.cfg", "[rule MemoryChecker]\nenabled = false\n")
    code, xml_out = run(tmp_path, "--lang", "minicpp", "--config", config, src)
    results = from_xml(open(xml_out, "rb").read())
    ids = [r.descriptor.id for r in results.reports]
    assert "MemoryChecker" not in ids
    assert len(ids) == 17


def test_directory_scan_filters_by_extension(tmp_path):
    write(tmp_path, "a.cpp", "namespace app { }\n")
    write(tmp_path, "b.cpp", "namespace app { }\n")
    write(tmp_path, "notes.txt", "not source\n")
    code, xml_out = run(tmp_path, "--lang", "minicpp", str(tmp_path))
    assert code == 0
    results = from_xml(open(xml_out, "rb").read())
    assert len(results.files) == 2
    assert all(f.endswith(".cpp") for f in results.files)


def test_seqdiag_run(tmp_path):
    chart = str(tmp_path / "librarytest.sd")
    shutil.copy(fixture_path("librarytest.sd"), chart)
    code, xml_out = run(tmp_path, "--lang", "seqdiag", chart)
    assert code == 1
    results = from_xml(open(xml_out, "rb").read())
    assert results.total_findings() == 2


def test_list_rules(capsys):
    assert main(["--lang", "minicpp", "--list-rules"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 18
    assert main(["--lang", "seqdiag", "--list-rules"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 2
    assert any(line.startswith("TriggerChecker") for line in out)


def test_html_output(tmp_path):
    src = write(tmp_path, "leak.cpp", "void f() { int* p = new int; }\n")
    html_out = str(tmp_path / "report.html")
    xml_out = str(tmp_path / "out.xml")
    code = main(
        ["--lang", "minicpp", src, "--xml-out", xml_out,
         "--html-out", html_out, "--timestamp", "t"]
    )
    assert code == 1
    page = open(html_out).read()
    assert "CGL Report Summary" in page
    assert "Memory handling checker" in page
