#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace newsclf {

// One row of the labeled news CSV. label: 0 = reliable, 1 = fake.
struct RawRecord {
    std::uint64_t id = 0;
    std::string title;
    std::string author;
    std::string text;
    int label = 0;

    bool operator==(const RawRecord&) const = default;
};

struct FoldAssignment {
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<int> fold;  // fold index in [0, k) per record position

    std::vector<std::size_t> train_indices(int held_out) const;
    std::vector<std::size_t> test_indices(int held_out) const;
};

// Loads a labeled corpus. Header must name at least id, text and label;
// title/author are optional and default to empty. Rows with empty text are
// kept (the cleaning stage drops and accounts for them); a missing or
// out-of-domain label aborts the load.
std::vector<RawRecord> load_csv(const std::string& path);

// Canonical writer; load_csv(save_csv(records)) round-trips exactly.
void save_csv(const std::vector<RawRecord>& records, const std::string& path);

// Stratified shuffle-then-deal fold assignment. Per-class fold sizes differ
// by at most one and total fold sizes differ by at most one. Deterministic
// for fixed (records, k, seed).
FoldAssignment assign_folds(const std::vector<RawRecord>& records, int k, std::uint64_t seed);

}  // namespace newsclf
