"""Acceptance suite: one test per criterion, exact equality everywhere,
seeded corpora at the stated scales, each printing a PASS/FAIL line with
its runtime (run with -s to see them)."""

import json
import random
import time

from cantorwit import cli
from cantorwit import corpus
from cantorwit.corpus import random_element, random_witness_input
from cantorwit.literals import parse_element
from cantorwit.witnesses import commutator, monolith_witness


def _report(name, ok, seconds, budget):
    status = "PASS" if ok else "FAIL"
    print(f"{status} {name}: {seconds:.2f}s (budget {budget}s)")
    assert ok, name
    assert seconds < budget, f"{name} exceeded its {budget}s budget ({seconds:.2f}s)"


def test_criterion_1_group_laws():
    start = time.monotonic()
    res = corpus.suite_group_laws(seed=101, cases=500, depth=6)
    _report("criterion 1: group laws (500 elements)", res.ok,
            time.monotonic() - start, 5)


def test_criterion_2_sigma_decompose():
    start = time.monotonic()
    res = corpus.suite_sigma_decompose(seed=102, cases=500, depth=6)
    _report("criterion 2: sigma/decompose2 (500 elements)", res.ok,
            time.monotonic() - start, 5)


def test_criterion_3_compression():
    start = time.monotonic()
    res = corpus.suite_compression(seed=103, transporter_cases=1000,
                                   wandering_cases=200, join_cases=200, window=8)
    _report("criterion 3: compression (1000+200+200 cases)", res.ok,
            time.monotonic() - start, 10)


def test_criterion_4_commutator_identity():
    start = time.monotonic()
    res = corpus.suite_commutator_identity(seed=104, cases=200)
    _report("criterion 4: commutator identity (200 cases)", res.ok,
            time.monotonic() - start, 5)


def test_criterion_5_monolith_witness():
    start = time.monotonic()
    rng = random.Random(105)
    failures = 0
    for i in range(200):
        a, ya, b, yb = random_witness_input(rng, full_union=i % 2 == 1)
        n = random_element(rng, max_depth=4, nontrivial=True)
        word = monolith_witness(a, ya, b, yb, n)
        ok = (word.base == n
              and len(word.letters) <= 8
              and word.evaluate() == commutator(a, b))
        failures += 0 if ok else 1
    _report("criterion 5: monolith witness (200 cases, both branches)",
            failures == 0, time.monotonic() - start, 20)


def test_criterion_6_derived_conjugator():
    start = time.monotonic()
    res = corpus.suite_derived_conjugator(seed=106, cases=300)
    _report("criterion 6: derived conjugator (300 cases)", res.ok,
            time.monotonic() - start, 10)


def test_criterion_7_claims():
    start = time.monotonic()
    res = corpus.suite_claims(seed=107, claim1_cases=100, claim2_cases=200,
                              claim3_cases=100)
    _report("criterion 7: cover-3 and claims 1-3 (1+100+200+100 cases)", res.ok,
            time.monotonic() - start, 20)


def test_criterion_8_certificate_roundtrip(capsys, tmp_path):
    start = time.monotonic()
    ok = True

    def cli_run(*argv):
        code = cli.main(list(argv))
        return code, capsys.readouterr().out

    def verify_obj(obj, expect):
        path = tmp_path / "cert.json"
        path.write_text(json.dumps(obj))
        code = cli.main(["verify", str(path)])
        capsys.readouterr()
        return code == expect

    a_text = "{0000->0001,0001->0000,001->001,01->01,1->1}"
    b_text = "{00000->00001,00001->00000,0001->0001,001->001,01->01,1->1}"
    n_text = "{00->01,01->10,10->00,11->11}"  # 3-cycle, not an involution

    # normal_word: emit, verify, then flip one exponent
    code, out = cli_run("monolith-witness", a_text, "[00]", b_text, "[00]",
                        n_text, "--json")
    ok = ok and code == 0
    word_obj = json.loads(out)
    ok = ok and verify_obj(word_obj, cli.EXIT_OK)
    tampered = json.loads(out)
    tampered["letters"][0]["exp"] = -tampered["letters"][0]["exp"]
    ok = ok and verify_obj(tampered, cli.EXIT_VERIFY)

    # commutator_word: derived-conj and claim1 emissions, then drop a factor
    code, out = cli_run("derived-conj", "{0->00,10->01,11->1}", "[11]", "--json")
    ok = ok and code == 0
    conj_obj = json.loads(out)
    ok = ok and verify_obj(conj_obj, cli.EXIT_OK)
    tampered = json.loads(out)
    tampered["factors"] = tampered["factors"][:1]
    ok = ok and verify_obj(tampered, cli.EXIT_VERIFY)

    code, out = cli_run("claim1", "[00]", "[01]", "[10]", "--json")
    ok = ok and code == 0 and verify_obj(json.loads(out), cli.EXIT_OK)

    # claim2 with a certified input: every embedded factor certificate verifies
    gcert_path = tmp_path / "gcert.json"
    gcert_path.write_text(json.dumps({
        "kind": "commutator_word", "arity": 2,
        "factors": [{"x": "{0->1,1->0}", "y": "{00->01,01->00,1->1}"}],
    }))
    code, out = cli_run("claim2", str(commutator(parse_element("{0->1,1->0}"),
                                                 parse_element("{00->01,01->00,1->1}"))),
                        "--cert", str(gcert_path), "--json")
    ok = ok and code == 0
    for cert_obj in json.loads(out)["certs"]:
        ok = ok and verify_obj(cert_obj, cli.EXIT_OK)

    # simple_witness: emit, verify, then blank one conjugator certificate
    ncert_path = tmp_path / "ncert.json"
    ncert_path.write_text(json.dumps({
        "kind": "commutator_word", "arity": 2,
        "factors": [{"x": "{00->01,01->00,1->1}", "y": "{01->10,10->01,00->00,11->11}"}],
    }))
    n2 = parse_element("{00->01,01->00,1->1}") * parse_element("{01->10,10->01,00->00,11->11}")
    n2 = n2 * parse_element("{00->01,01->00,1->1}").inverse() \
        * parse_element("{01->10,10->01,00->00,11->11}").inverse()
    code, out = cli_run("simple-witness", a_text, "[00]", b_text, "[00]",
                        str(n2), "--n-cert", str(ncert_path), "--json")
    ok = ok and code == 0
    simple_obj = json.loads(out)
    ok = ok and verify_obj(simple_obj, cli.EXIT_OK)
    tampered = json.loads(out)
    tampered["conjugators"][0]["factors"] = []
    ok = ok and verify_obj(tampered, cli.EXIT_VERIFY)

    _report("criterion 8: certificate round-trip with mutations", ok,
            time.monotonic() - start, 5)
