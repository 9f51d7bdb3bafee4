#include "qsd/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsd {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > rank() || seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<size_t>(v) - 1] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i) {
    if (i < 1 || i >= n)
        throw std::invalid_argument("generator index out of range");
    Perm p = identity(n);
    std::swap(p.img_[static_cast<size_t>(i) - 1], p.img_[static_cast<size_t>(i)]);
    return p;
}

Perm Perm::from_cycle(const std::vector<int>& entries, int n) {
    Perm p = identity(n);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : entries) {
        if (v < 1 || v > n)
            throw std::invalid_argument("cycle entry out of range");
        if (seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("repeated cycle entry");
        seen[static_cast<size_t>(v) - 1] = true;
    }
    for (size_t r = 0; r + 1 < entries.size(); ++r)
        p.img_[static_cast<size_t>(entries[r]) - 1] = entries[r + 1];
    if (entries.size() > 1)
        p.img_[static_cast<size_t>(entries.back()) - 1] = entries.front();
    return p;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= rank(); ++i)
        if ((*this)(i) != i)
            return false;
    return true;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("rank mismatch");
    std::vector<int> v(a.img_.size());
    for (int i = 1; i <= a.rank(); ++i)
        v[static_cast<size_t>(i) - 1] = a(b(i));
    return Perm(std::move(v));
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 1; i <= rank(); ++i)
        v[static_cast<size_t>((*this)(i)) - 1] = i;
    return Perm(std::move(v));
}

int Perm::length() const {
    int inv = 0;
    for (int i = 1; i <= rank(); ++i)
        for (int j = i + 1; j <= rank(); ++j)
            if ((*this)(i) > (*this)(j))
                ++inv;
    return inv;
}

std::vector<int> Perm::reduced_word() const {
    // sigma * s_i swaps one-line entries at positions i, i+1; picking a
    // descent each time shortens by exactly one.
    std::vector<int> word;
    std::vector<int> v = img_;
    bool done = false;
    while (!done) {
        done = true;
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                word.push_back(static_cast<int>(i) + 1);
                done = false;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<Perm> Perm::staircase_decompose() const {
    const int d = rank();
    std::vector<Perm> parts(static_cast<size_t>(d > 0 ? d - 1 : 0), Perm::identity(d));
    Perm cur = *this;
    for (int i = d - 1; i >= 1; --i) {
        // sigma_i = s_i s_{i-1} ... s_j where j = cur^{-1}(i+1), or 1 if fixed.
        int j = cur.inverse()(i + 1);
        Perm part = Perm::identity(d);
        for (int r = i; r >= j; --r)
            part = part * Perm::transposition(d, r);
        parts[static_cast<size_t>(i) - 1] = part;
        cur = cur * part.inverse();
    }
    if (!cur.is_identity())
        throw std::logic_error("staircase decomposition failed");
    return parts;
}

std::pair<Perm, Perm> Perm::coset_factorize(int d) const {
    const int N = rank();
    if (d < 0 || d > N)
        throw std::invalid_argument("coset_factorize: bad subgroup rank");
    // The coset S_d*sigma relabels the values 1..d; the minimal element
    // places them increasingly along their (fixed) positions.
    std::vector<int> pos;
    for (int x = 1; x <= N; ++x)
        if ((*this)(x) <= d)
            pos.push_back(x);
    std::vector<int> w_img = img_;
    std::vector<int> u_img(static_cast<size_t>(N));
    std::iota(u_img.begin(), u_img.end(), 1);
    for (int r = 1; r <= d; ++r) {
        w_img[static_cast<size_t>(pos[static_cast<size_t>(r) - 1]) - 1] = r;
        u_img[static_cast<size_t>(r) - 1] = (*this)(pos[static_cast<size_t>(r) - 1]);
    }
    return {Perm(std::move(u_img)), Perm(std::move(w_img))};
}

Perm Perm::shift_up(int k) const {
    if (k < 0)
        throw std::invalid_argument("shift_up: negative shift");
    std::vector<int> v(static_cast<size_t>(rank() + k));
    std::iota(v.begin(), v.end(), 1);
    for (int i = 1; i <= rank(); ++i)
        v[static_cast<size_t>(i + k) - 1] = (*this)(i) + k;
    return Perm(std::move(v));
}

Perm Perm::widen(int new_rank) const {
    if (new_rank < rank())
        throw std::invalid_argument("widen: rank would shrink");
    std::vector<int> v(static_cast<size_t>(new_rank));
    std::iota(v.begin(), v.end(), 1);
    for (int i = 1; i <= rank(); ++i)
        v[static_cast<size_t>(i) - 1] = (*this)(i);
    return Perm(std::move(v));
}

Perm Perm::restrict_to(int d) const {
    for (int i = d + 1; i <= rank(); ++i)
        if ((*this)(i) != i)
            throw std::invalid_argument("restrict_to: point not fixed");
    return Perm(std::vector<int>(img_.begin(), img_.begin() + d));
}

std::string Perm::to_cycles() const {
    std::string s;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 1; i <= rank(); ++i) {
        if (seen[static_cast<size_t>(i) - 1] || (*this)(i) == i)
            continue;
        s += "(";
        int j = i;
        bool first = true;
        while (!seen[static_cast<size_t>(j) - 1]) {
            seen[static_cast<size_t>(j) - 1] = true;
            if (!first)
                s += " ";
            s += std::to_string(j);
            first = false;
            j = (*this)(j);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

std::string Perm::to_string() const {
    std::string s = "[";
    for (int i = 1; i <= rank(); ++i) {
        if (i > 1)
            s += ",";
        s += std::to_string((*this)(i));
    }
    return s + "]";
}

Perm Perm::parse_cycles(const std::string& s, int n) {
    Perm p = Perm::identity(n);
    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
        if (s[i] != '(')
            throw std::invalid_argument("cycle notation: expected '('");
        size_t close = s.find(')', i);
        if (close == std::string::npos)
            throw std::invalid_argument("cycle notation: missing ')'");
        std::istringstream in(s.substr(i + 1, close - i - 1));
        std::vector<int> entries;
        int v;
        while (in >> v)
            entries.push_back(v);
        if (!entries.empty())
            p = p * Perm::from_cycle(entries, n);
        i = close + 1;
    }
    return p;
}

std::vector<Perm> symmetric_group(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> all;
    do {
        all.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return all;
}

std::vector<Perm> min_coset_reps(int d, int N) {
    std::vector<Perm> reps;
    for (const Perm& s : symmetric_group(N))
        if (s.coset_factorize(d).first.is_identity())
            reps.push_back(s);
    return reps;
}

}  // namespace qsd
