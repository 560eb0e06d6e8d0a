#pragma once

#include <stabkit/chow.hpp>

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace stabkit {

/// Class in K_num(P^3, C_0) in the integral basis {[C_-1],[C_0],[C_1],[C_2]}.
struct KClassC0 {
    std::array<Int, 4> c{};  // c[k] is the coefficient of [C_{k-1}]

    KClassC0() = default;
    KClassC0(Int cm1, Int c0, Int c1, Int c2) : c{std::move(cm1), std::move(c0), std::move(c1), std::move(c2)} {}

    const Int& coeff(int j) const { return c.at(j + 1); }  // j in {-1,0,1,2}

    friend KClassC0 operator+(const KClassC0& a, const KClassC0& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend KClassC0 operator-(const KClassC0& a, const KClassC0& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }
    KClassC0 operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
    friend KClassC0 operator*(const Int& s, const KClassC0& a) {
        return {s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]};
    }
    friend bool operator==(const KClassC0& a, const KClassC0& b) { return a.c == b.c; }
    friend bool operator!=(const KClassC0& a, const KClassC0& b) { return !(a == b); }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

    std::string str() const;
};

/// Class in the rank-2 lattice of the Kuznetsov component, coordinates in
/// {kappa_1, kappa_2} (Y side) or {kappabar_1, kappabar_2} (C_0 side).
/// The Euler form is the same on both: chi(u,w) = -a_u a_w - a_u b_w - b_u b_w.
struct KClassKu {
    Int a, b;

    KClassKu() : a(0), b(0) {}
    KClassKu(Int pa, Int pb) : a(std::move(pa)), b(std::move(pb)) {}

    friend KClassKu operator+(const KClassKu& u, const KClassKu& w) { return {u.a + w.a, u.b + w.b}; }
    friend KClassKu operator-(const KClassKu& u, const KClassKu& w) { return {u.a - w.a, u.b - w.b}; }
    KClassKu operator-() const { return {-a, -b}; }
    friend bool operator==(const KClassKu& u, const KClassKu& w) { return u.a == w.a && u.b == w.b; }
    friend bool operator!=(const KClassKu& u, const KClassKu& w) { return !(u == w); }
    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator<(const KClassKu& u, const KClassKu& w) {
        return u.a != w.a ? u.a < w.a : u.b < w.b;
    }

    std::string str() const { return "(" + a.get_str() + "," + b.get_str() + ")"; }
};

// --- C_0-side lattice -------------------------------------------------

ChernVector ch_of(const KClassC0& v, int m = 3);

/// Inverts ch_0..ch_3 against the basis characters; throws when the
/// solution is not integral (the input is then not a lattice class).
KClassC0 kclass_from_ch(const ChernVector& v);

/// Gram matrix chi_{C_0}(C_i, C_j). For m=3 indices run over -1..2 (4x4);
/// for m=2 over 0..2 (3x3).
std::vector<std::vector<Rational>> gram_clifford(int m);

Rational gram_determinant(const std::vector<std::vector<Rational>>& g);

/// Euler pairing on K_num(P^3, C_0) through the Gram matrix.
Int chi_c0(const KClassC0& u, const KClassC0& w);

/// Tensoring with C_k shifts the grading: [C_j] -> [C_{j+k}]; at character
/// level multiplication by exp(k h / 2). Integrality is asserted.
KClassC0 twist_c0(const KClassC0& v, int k);

/// K-shadow of the Serre functor of D^b(P^3, C_0): minus the twist by C_{-2}.
KClassC0 serre_db_c0(const KClassC0& v);

KClassC0 kubar1();  //  [C_0] - 3[C_1] + [C_2]
KClassC0 kubar2();  // -[C_-1] + 4[C_0] - 4[C_1] + [C_2]

bool in_kubar_span(const KClassC0& v);
KClassKu kubar_coords(const KClassC0& v);
KClassC0 from_kubar(const KClassKu& v);

/// Rotation functor on the C_0-side Kuznetsov lattice: tensor by C_1 then
/// mutate left through C_1. Input must lie in the kappabar span.
KClassC0 rotation_ku_c0(const KClassC0& v);

// --- K-level mutations ------------------------------------------------

/// An exceptional class; construction asserts chi(E,E) = 1.
struct ExceptionalRecord {
    std::string label;
    ChernVector ch;

    ExceptionalRecord(std::string l, ChernVector c);
};

/// [L_E F] = [F] - chi(E,F) [E].
ChernVector mutate_left_k(const ExceptionalRecord& e, const ChernVector& f);

/// [R_E F] = [F] - chi(F,E) [E].
ChernVector mutate_right_k(const ExceptionalRecord& e, const ChernVector& f);

/// K-shadow of the projection D^b(Y) -> Ku(Y): the mutation chain
/// R_{O(-1)} R_{O(-2)} L_O L_{O(1)}, then coordinates in {kappa_1, kappa_2}.
/// Throws when the residual class is outside the span.
KClassKu project_ku_y(const ChernVector& f);

// --- rank-2 lattice dynamics -------------------------------------------

Int chi_ku(const KClassKu& u, const KClassKu& w);
KClassKu serre_ku(const KClassKu& v);      // kappa_1 -> kappa_2, kappa_2 -> kappa_2 - kappa_1
KClassKu rotation_ku(const KClassKu& v);   // kappa_1 -> kappa_2 - kappa_1, kappa_2 -> -kappa_1

/// a^2 + ab + b^2 = -chi(v,v); never takes the value 2.
Int norm_form(const KClassKu& v);

/// Orbit of v under the group generated by the Serre matrix (contains -v,
/// since the cube of the matrix is -1); deduplicated, deterministic order.
std::vector<KClassKu> serre_orbit(const KClassKu& v);

bool is_primitive(const KClassKu& v);

/// The unique pair v = v_+ + v_- with |v| > |v_pm| (Euclidean norm on the
/// coordinates) and wedge v_- ^ v_+ = 1. Input must be primitive.
std::pair<KClassKu, KClassKu> pick_decompose(const KClassKu& v);

/// Node of the non-emptiness induction: leaves have norm form 1 or 3;
/// internal nodes record chi(v_+, v_-), asserted negative.
struct NonemptyNode {
    KClassKu v;
    Int chi_plus_minus{0};
    std::unique_ptr<NonemptyNode> minus, plus;
    bool leaf() const { return !minus; }

    /// "kappa2-orbit" or "kappa1+kappa2-orbit" for leaves, "" otherwise.
    std::string orbit_tag() const;
};

std::unique_ptr<NonemptyNode> nonempty_tree(const KClassKu& v);

}  // namespace stabkit
