// Acceptance run: one PASS/FAIL line per criterion. With --expect-fail N (repeatable) the exit
// status is 0 exactly when the failing set equals the expected one.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "zdtpc/graph.hpp"
#include "zdtpc/suites.hpp"
#include "zdtpc/tpc.hpp"
#include "zdtpc/zdg.hpp"

using namespace zdtpc;

namespace {

struct Line {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& why) {
        if (ok) return;
        pass = false;
        note << " [" << why << "]";
    }
};

bool has_finding(const SuiteReport& r, const std::string& id) {
    return std::any_of(r.discrepancies.begin(), r.discrepancies.end(), [&](const Discrepancy& d) {
        return std::find(d.findings.begin(), d.findings.end(), id) != d.findings.end();
    });
}

bool raised_at(const SuiteReport& r, const std::string& instance, const std::string& id) {
    return std::any_of(r.discrepancies.begin(), r.discrepancies.end(), [&](const Discrepancy& d) {
        return d.instance == instance && std::find(d.findings.begin(), d.findings.end(), id) != d.findings.end();
    });
}

std::string summary(const SuiteReport& r) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << r.suite << ": " << r.instances << " instances, " << r.agreements << " agree, " << r.discrepancies.size()
        << " discrepancies (" << r.unexpected() << " unexpected), " << r.seconds << " s";
    return out.str();
}

void suite_line(Line& l, const SuiteReport& r, std::size_t instances, double seconds) {
    l.note << summary(r);
    l.require(r.unexpected() == 0, "unexpected discrepancies");
    if (instances) l.require(r.instances == instances, "expected " + std::to_string(instances) + " instances");
    if (seconds > 0) l.require(r.seconds < seconds, "time limit " + std::to_string(seconds) + " s");
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--expect-fail" && i + 1 < argc) {
            expected_failures.insert(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--expect-fail N]...\n";
            return 1;
        }
    }

    std::map<std::string, SuiteReport> reports;
    for (const auto& name : suite_names()) {
        SuiteOptions o;
        if (name == "paths" || name == "cycles") o.max_n = 24;
        if (name == "zn-sweep") o.max_n = 200;
        reports[name] = run_suite(name, o);
    }

    std::map<int, Line> lines;
    const std::map<int, std::string> titles{
        {1, "path characterization"},       {2, "cycle characterization"},
        {3, "non-regular fixture graph"},           {4, "matching and evenness of every code"},
        {5, "tree suite"},                  {6, "zero-divisor sweep over Z_n"},
        {7, "local catalog"},               {8, "reduced products"},
        {9, "mixed products"},              {10, "counting"},
        {11, "known-findings manifest"}};

    suite_line(lines[1], reports["paths"], 23, 1.0);
    suite_line(lines[2], reports["cycles"], 22, 1.0);

    {
        auto& l = lines[3];
        const auto g = fixture_fig1();
        const CodeSet c{0, 1, 6, 7};
        l.require(is_total_perfect_code(g, c), "{v1,v2,v7,v8} is not a code");
        l.require(!is_regular(g).has_value(), "graph is regular");
        l.require(g.order() % 2 == 0, "odd order");
        l.note << g.order() << " vertices, code {v1,v2,v7,v8}";
    }
    {
        auto& l = lines[4];
        std::size_t codes = 0;
        for (const auto& [name, r] : reports) {
            codes += r.codes_checked;
            l.require(!has_finding(r, "code-structure"), name + " produced a malformed code");
        }
        l.require(codes > 0, "no codes were checked");
        l.note << codes << " codes checked across all suites";
    }
    suite_line(lines[5], reports["trees"], 0, 30.0);
    suite_line(lines[6], reports["zn-sweep"], 198, 120.0);
    {
        auto& l = lines[7];
        suite_line(l, reports["local-catalog"], 0, 0);
        l.note << "; ";
        suite_line(l, reports["fixtures"], 0, 0);
    }
    suite_line(lines[8], reports["reduced-products"], 0, 0);
    suite_line(lines[9], reports["mixed-products"], 0, 0);
    {
        auto& l = lines[10];
        const auto& r = reports["counting"];
        l.require(!has_finding(r, "count"), "closed form disagrees with enumeration");
        l.require(r.unexpected() == 0, "unexpected discrepancies");
        l.note << summary(r) << "; stated vs enumerated:";
        for (const auto& e : count_form_report()) {
            l.note << ' ' << e.form << ' ' << e.stated.value_or(0) << '/' << e.count;
            if (e.stated && *e.stated != e.count)
                l.require(false, e.form + " states " + std::to_string(*e.stated) + " but the ring has " +
                                     std::to_string(e.count));
        }
    }
    {
        auto& l = lines[11];
        std::set<std::string> decider_ids, observed;
        for (const auto& f : known_findings())
            if (f.kind == "decider") decider_ids.insert(f.id);
        std::size_t unexpected = 0;
        std::set<std::string> other;
        for (const auto& [name, r] : reports) {
            unexpected += r.unexpected();
            for (const auto& d : r.discrepancies)
                for (const auto& id : d.findings) (decider_ids.count(id) ? observed : other).insert(id);
        }
        const std::set<std::string> wanted{"bipartite-order-two-converse", "mixed-local-field-bound"};
        l.require(observed == wanted, "decider findings differ from the documented pair");
        l.require(raised_at(reports["paths"], "path:4", "bipartite-order-two-converse"), "P4 finding missing");
        l.require(raised_at(reports["mixed-products"], "Z9 x Z2", "mixed-local-field-bound"), "Z9 x Z2 finding missing");
        l.require(unexpected == 0, std::to_string(unexpected) + " unexpected discrepancies");
        l.note << "decider findings:";
        for (const auto& id : observed) l.note << ' ' << id;
        l.note << "; other known findings:";
        for (const auto& id : other) l.note << ' ' << id;
    }

    std::set<int> failed;
    for (const auto& [n, l] : lines) {
        if (!l.pass) failed.insert(n);
        std::cout << "criterion " << n << " " << (l.pass ? "PASS" : "FAIL") << " " << titles.at(n) << ": "
                  << l.note.str() << '\n';
    }
    for (const auto& [name, r] : reports)
        for (const auto& d : r.discrepancies)
            if (!d.known) std::cout << "unexpected in " << name << ": " << d.instance << ": " << d.detail << '\n';
    if (!expected_failures.empty()) {
        std::cout << (failed == expected_failures ? "failing set matches the expected one\n"
                                                  : "failing set differs from the expected one\n");
        return failed == expected_failures ? 0 : 2;
    }
    return failed.empty() ? 0 : 2;
}
