#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace popdiff {

struct VerifyConfig {
    std::vector<int> criteria; // subset of 1..11; empty config = empty report
    std::uint64_t seed = 0xC0FFEEULL;
    int jobs = 1;
    // negative control: measure construction windows over d <= D instead of
    // d < D, which must make otherwise-green checks fail
    bool window_off_by_one = false;
};

VerifyConfig default_verify_config();
int criterion_count();
const char* criterion_title(int criterion);

struct CheckRecord {
    int criterion = 0;
    std::string point;
    std::string check;
    bool pass = true;
    std::string measured;
    std::string bound;
};

struct VerifyReport {
    std::vector<CheckRecord> records;

    std::size_t failure_count() const;
    std::size_t failure_count(int criterion) const;
    std::size_t record_count(int criterion) const;
    // columns: criterion,point,check,pass,measured,bound
    void write_csv(std::ostream& out) const;
};

// Runs the selected acceptance checks; failures are data, not exceptions.
VerifyReport verify_theorem_suite(const VerifyConfig& cfg);

} // namespace popdiff
