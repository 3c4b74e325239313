// Acceptance suite: runs every criterion of the theorem-check suite and
// prints one pass/fail line per criterion. Exits nonzero if any check fails.
//
// Usage: acceptance [--criteria 1,2,...] [--seed S] [--jobs J] [--csv PATH]

#include "popdiff/verify.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

int main(int argc, char** argv) {
    popdiff::VerifyConfig cfg = popdiff::default_verify_config();
    std::string csv_path;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "missing value for " << arg << "\n";
                std::exit(1);
            }
            return argv[++i];
        };
        if (arg == "--criteria") {
            cfg.criteria.clear();
            std::istringstream is(next());
            std::string tok;
            while (std::getline(is, tok, ',')) cfg.criteria.push_back(std::stoi(tok));
        } else if (arg == "--seed") {
            cfg.seed = std::stoull(next());
        } else if (arg == "--jobs") {
            cfg.jobs = std::stoi(next());
        } else if (arg == "--csv") {
            csv_path = next();
        } else {
            std::cerr << "unknown argument " << arg << "\n";
            return 1;
        }
    }

    popdiff::VerifyReport rep = popdiff::verify_theorem_suite(cfg);

    for (int crit : cfg.criteria) {
        std::size_t fails = rep.failure_count(crit);
        std::cout << (fails == 0 ? "[PASS] " : "[FAIL] ") << "criterion " << crit << ": "
                  << popdiff::criterion_title(crit) << " (" << rep.record_count(crit)
                  << " checks, " << fails << " failures)\n";
        if (fails > 0) {
            std::size_t shown = 0;
            for (const auto& r : rep.records) {
                if (r.criterion != crit || r.pass) continue;
                std::cout << "       " << r.point << " | " << r.check << " | measured " << r.measured
                          << " | bound " << r.bound << "\n";
                if (++shown == 5) {
                    std::cout << "       ... (" << fails - shown << " more)\n";
                    break;
                }
            }
        }
    }
    std::cout << "total: " << rep.records.size() << " checks, " << rep.failure_count()
              << " failures\n";

    if (!csv_path.empty()) {
        std::ofstream os(csv_path);
        rep.write_csv(os);
    }
    return rep.failure_count() == 0 ? 0 : 1;
}
