#include "dng/perm.hpp"

#include <cctype>
#include <sstream>

namespace dng {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty())
        throw InputError("permutation degree must be at least 1");
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images_) {
        if (v < 0 || v >= n)
            throw InputError("permutation image " + std::to_string(v) +
                             " out of range for degree " + std::to_string(n));
        if (seen[static_cast<std::size_t>(v)])
            throw InputError("permutation image " + std::to_string(v) +
                             " repeated; not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 1)
        throw InputError("invalid degree " + std::to_string(degree));
    std::vector<int> im(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i)
        im[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i)
        im[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i)
            return false;
    return true;
}

std::vector<int> Permutation::moved_points() const {
    std::vector<int> moved;
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i)
            moved.push_back(i);
    return moved;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw InputError("degree mismatch in compose: " + std::to_string(p.degree()) +
                         " vs " + std::to_string(q.degree()));
    std::vector<int> im(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i)
        im[static_cast<std::size_t>(i)] = p(q(i));
    return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& g, const Permutation& p) {
    return compose(compose(g, p), g.inverse());
}

Permutation commutator(const Permutation& a, const Permutation& b) {
    return compose(compose(a, b), compose(a.inverse(), b.inverse()));
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& msg) {
    throw InputError("cycle notation error at position " + std::to_string(pos + 1) + ": " +
                     msg + " in \"" + text + "\"");
}

} // namespace

Permutation parse_cycles(const std::string& text, int degree) {
    if (degree < 1)
        throw InputError("invalid degree " + std::to_string(degree));
    std::vector<int> im(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i)
        im[static_cast<std::size_t>(i)] = i;
    std::vector<char> used(static_cast<std::size_t>(degree), 0);

    std::size_t pos = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };

    skip_ws();
    bool any_cycle = false;
    while (pos < n) {
        if (text[pos] != '(')
            parse_fail(text, pos, "expected '('");
        ++pos;
        any_cycle = true;
        std::vector<int> cycle;
        skip_ws();
        while (pos < n && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                parse_fail(text, pos, "expected point or ')'");
            std::size_t start = pos;
            long value = 0;
            while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > degree)
                    parse_fail(text, start, "point " + std::to_string(value) +
                                                " exceeds degree " + std::to_string(degree));
                ++pos;
            }
            if (value < 1)
                parse_fail(text, start, "points are 1-based");
            int point = static_cast<int>(value) - 1;
            if (used[static_cast<std::size_t>(point)])
                parse_fail(text, start, "repeated point " + std::to_string(value));
            used[static_cast<std::size_t>(point)] = 1;
            cycle.push_back(point);
            skip_ws();
        }
        if (pos >= n)
            parse_fail(text, n - 1, "unclosed '('");
        ++pos; // ')'
        for (std::size_t i = 0; i < cycle.size(); ++i)
            im[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        skip_ws();
    }
    if (!any_cycle)
        parse_fail(text, 0, "empty input; identity is \"()\"");
    return Permutation(std::move(im));
}

std::string to_cycle_string(const Permutation& p) {
    const int n = p.degree();
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    std::ostringstream out;
    bool wrote = false;
    for (int i = 0; i < n; ++i) {
        if (done[static_cast<std::size_t>(i)] || p(i) == i)
            continue;
        out << '(';
        int j = i;
        bool first = true;
        do {
            if (!first)
                out << ' ';
            out << (j + 1);
            done[static_cast<std::size_t>(j)] = 1;
            j = p(j);
            first = false;
        } while (j != i);
        out << ')';
        wrote = true;
    }
    return wrote ? out.str() : "()";
}

} // namespace dng
