#pragma once

#include <stdexcept>
#include <string>

namespace fano {

// Raised when a randomized search exhausts its attempt budget.  Carries enough
// context to tell "the theorem range was violated" apart from "unlucky sampling".
class search_failure : public std::runtime_error {
public:
    search_failure(const std::string& what, int attempts, bool in_guaranteed_range)
        : std::runtime_error(what), attempts_(attempts), in_range_(in_guaranteed_range) {}

    int attempts() const { return attempts_; }
    bool in_guaranteed_range() const { return in_range_; }

private:
    int attempts_;
    bool in_range_;
};

// Raised when two independent computation routes disagree, or an exact-division
// step fails.  These are never user errors; they indicate a broken invariant.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace fano
