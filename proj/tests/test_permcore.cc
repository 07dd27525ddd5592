#include <doctest.h>

#include "oracles.hh"

#include <ecswitch/errors.hh>
#include <ecswitch/group_spec.hh>
#include <ecswitch/perm_group.hh>
#include <ecswitch/permutation.hh>
#include <ecswitch/property_t.hh>

#include <random>

using namespace ecswitch;

namespace
{
    auto cyc(int m, std::string_view text) -> Permutation
    {
        return Permutation::parse_cycles(m, text);
    }

    auto random_perm(int m, std::mt19937_64 & rng) -> Permutation
    {
        std::vector<Colour> image(m);
        std::iota(image.begin(), image.end(), 1);
        std::shuffle(image.begin(), image.end(), rng);
        return Permutation{image};
    }

    auto factorial(int m) -> std::size_t
    {
        std::size_t f = 1;
        for (int i = 2 ; i <= m ; ++i)
            f *= i;
        return f;
    }
}

TEST_CASE("composition applies the right operand first")
{
    CHECK(compose(cyc(2, "(1 2)"), cyc(2, "(1 2)")).is_identity());

    auto p = cyc(3, "(1 2)"), q = cyc(3, "(2 3)");
    auto r = compose(p, q);
    for (Colour c = 1 ; c <= 3 ; ++c)
        CHECK(r(c) == p(q(c)));
    CHECK(r == cyc(3, "(1 2 3)"));

    CHECK_THROWS_AS(compose(cyc(2, "(1 2)"), cyc(3, "(1 2)")), DegreeMismatch);
}

TEST_CASE("identity and inverse laws on random permutations")
{
    std::mt19937_64 rng(7);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        int m = 1 + trial % 8;
        auto p = random_perm(m, rng);
        CHECK(compose(Permutation::identity(m), p) == p);
        CHECK(compose(p, Permutation::identity(m)) == p);
        CHECK(compose(p, inverse(p)).is_identity());
        CHECK(compose(inverse(p), p).is_identity());
        CHECK(Permutation::parse_cycles(m, p.to_cycle_string()) == p);
    }
}

TEST_CASE("permutation construction validates bijections")
{
    CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Permutation({1, 4, 2}), InvalidArgument);
    CHECK_THROWS_AS(cyc(3, "(1 4)"), InvalidArgument);
    CHECK_THROWS_AS(cyc(3, "(1 2"), InvalidArgument);
    CHECK_THROWS_AS(cyc(3, ""), InvalidArgument);
    CHECK(cyc(3, "()").is_identity());
    CHECK(cyc(4, "(1 2)(3 4)").to_cycle_string() == "(1 2)(3 4)");
    CHECK(cyc(4, "(3 4)(2 1)").to_cycle_string() == "(1 2)(3 4)");
    CHECK(cyc(5, "(2 4)").fixed_points() == std::vector<Colour>{1, 3, 5});
}

TEST_CASE("closure examples")
{
    CHECK(generate_closure(3, {cyc(3, "(1 2)"), cyc(3, "(1 2 3)")}).order() == 6);
    CHECK(generate_closure(4, {cyc(4, "(1 2 3 4)")}).order() == 4);
    CHECK(generate_closure(3, {}).order() == 1);
    CHECK_THROWS_AS(generate_closure(5, {cyc(5, "(1 2)"), cyc(5, "(1 2 3 4 5)")}, 10), CapExceeded);
    CHECK_THROWS_AS(generate_closure(3, {cyc(4, "(1 2)")}), DegreeMismatch);
}

TEST_CASE("named groups agree with brute-force closure of their generators")
{
    for (int m = 2 ; m <= 7 ; ++m)
        for (auto kind : {GroupKind::Symmetric, GroupKind::Alternating, GroupKind::Dihedral, GroupKind::Cyclic}) {
            if (m < 3 && (kind == GroupKind::Alternating || kind == GroupKind::Dihedral))
                continue;
            CAPTURE(m);
            CAPTURE(to_string(kind));
            auto group = make_named(kind, m);
            std::vector<oracles::Images> gens;
            for (auto & g : group.generators())
                gens.push_back(oracles::images_of(g));
            auto brute = oracles::brute_closure(m, gens);
            CHECK(brute.size() == group.order());
            for (auto & p : group.elements())
                CHECK(brute.contains(oracles::images_of(p)));

            CHECK(factorial(m) % group.order() == 0);
            switch (kind) {
                case GroupKind::Symmetric: CHECK(group.order() == factorial(m)); break;
                case GroupKind::Alternating: CHECK(group.order() == factorial(m) / 2); break;
                case GroupKind::Dihedral: CHECK(group.order() == std::size_t(2 * m)); break;
                case GroupKind::Cyclic: CHECK(group.order() == std::size_t(m)); break;
                case GroupKind::Custom: break;
            }
            for (auto & p : group.elements()) {
                CHECK(group.contains(inverse(p)));
                CHECK(compose(p, inverse(p)).is_identity());
            }
        }
}

TEST_CASE("named group examples")
{
    CHECK(make_named(GroupKind::Dihedral, 4).order() == 8);
    CHECK(make_named(GroupKind::Alternating, 4).order() == 12);
    auto s3 = make_named(GroupKind::Symmetric, 3);
    CHECK(s3.order() == 6);
    CHECK(s3.contains(cyc(3, "(1 2)")));
    CHECK(s3.contains(cyc(3, "(2 3)")));
    CHECK(s3.elements().front().is_identity());
    CHECK_THROWS_AS(make_named(GroupKind::Dihedral, 2), InvalidArgument);
    CHECK_THROWS_AS(make_named(GroupKind::Alternating, 2), InvalidArgument);
    CHECK_THROWS_AS(make_named(GroupKind::Cyclic, 1), InvalidArgument);
}

TEST_CASE("dihedral groups hold the rotation and exactly m reflections")
{
    for (int m = 3 ; m <= 8 ; ++m) {
        auto d = make_named(GroupKind::Dihedral, m);
        auto rotation = long_cycle(m);
        CHECK(d.contains(rotation));
        std::set<Permutation> rotations;
        auto r = Permutation::identity(m);
        for (int i = 0 ; i < m ; ++i) {
            rotations.insert(r);
            r = compose(rotation, r);
        }
        int reflections = 0;
        for (auto & p : d.elements())
            if (! rotations.contains(p)) {
                ++reflections;
                CHECK(compose(p, p).is_identity());
            }
        CHECK(reflections == m);
    }
}

TEST_CASE("property T witness examples")
{
    auto s3 = make_named(GroupKind::Symmetric, 3);
    auto w = find_t_witness(s3, 1, 2);
    REQUIRE(w);
    CHECK(w->alpha == cyc(3, "(1 2)"));
    CHECK(w->k == 3);
    CHECK(w->beta == cyc(3, "(2 3)"));

    CHECK_FALSE(find_t_witness(make_named(GroupKind::Dihedral, 4), 1, 2));
    CHECK_FALSE(find_t_witness(make_named(GroupKind::Cyclic, 4), 1, 3));

    CHECK(has_property_tj(s3, 1));
    CHECK(has_property_tj(make_named(GroupKind::Dihedral, 5), 2));
    CHECK_FALSE(has_property_tj(make_named(GroupKind::Dihedral, 4), 1));
    CHECK(property_tj_failure(make_named(GroupKind::Dihedral, 4), 1) == 2);
    CHECK(has_property_tj(make_named(GroupKind::Alternating, 4), 1));
    CHECK_THROWS_AS(find_t_witness(s3, 0, 1), InvalidArgument);
}

TEST_CASE("witness search agrees with the definition on every pair")
{
    std::vector<PermGroup> groups;
    for (int m = 2 ; m <= 6 ; ++m) {
        groups.push_back(make_named(GroupKind::Symmetric, m));
        groups.push_back(make_named(GroupKind::Cyclic, m));
        if (m >= 3) {
            groups.push_back(make_named(GroupKind::Alternating, m));
            groups.push_back(make_named(GroupKind::Dihedral, m));
        }
    }
    groups.push_back(parse_group_spec("gens4:(1 2)(3 4)"));
    groups.push_back(parse_group_spec("gens5:(1 2 3);(4 5)"));

    for (auto & group : groups) {
        auto images = oracles::group_images(group);
        for (Colour i = 1 ; i <= group.degree() ; ++i)
            for (Colour j = 1 ; j <= group.degree() ; ++j) {
                CAPTURE(group.name());
                CAPTURE(i);
                CAPTURE(j);
                auto w = find_t_witness(group, i, j);
                CHECK(w.has_value() == oracles::brute_tij(images, i, j));
                if (w) {
                    CHECK(w->alpha(i) == j);
                    CHECK(w->alpha(w->k) == w->k);
                    CHECK(w->beta(j) == w->k);
                    CHECK(group.contains(w->alpha));
                    CHECK(group.contains(w->beta));
                }
            }
    }
}

TEST_CASE("block structure of even dihedral groups")
{
    auto b = dihedral_blocks(4);
    CHECK(b.odd_block == std::vector<Colour>{1, 3});
    CHECK(b.even_block == std::vector<Colour>{2, 4});

    std::size_t preserving = 0;
    std::set<BlockAction> image;
    for (auto & p : b.group.elements()) {
        bool keeps = p(1) % 2 == 1 && p(3) % 2 == 1;
        preserving += keeps;
        image.insert(b.quotient(p));
    }
    CHECK(b.stabilizer.order() == preserving);
    CHECK(preserving == 4);
    CHECK(image.size() == 2);

    for (int m = 2 ; m <= 8 ; m += 2) {
        auto blocks = dihedral_blocks(m);
        CHECK(blocks.group.order() == 2 * blocks.stabilizer.order());
        auto as_int = [] (BlockAction a) { return a == BlockAction::Swap ? 1 : 0; };
        for (auto & p : blocks.group.elements()) {
            CHECK((blocks.quotient(p) == BlockAction::Preserve) == blocks.stabilizer.contains(p));
            for (auto & q : blocks.group.elements())
                CHECK(as_int(blocks.quotient(compose(p, q))) == (as_int(blocks.quotient(p)) ^ as_int(blocks.quotient(q))));
        }
        auto rho = block_swapping_reflection(m);
        CHECK(blocks.group.contains(rho));
        CHECK(rho(1) == 2);
        CHECK(rho(2) == 1);
        CHECK(compose(rho, rho).is_identity());
    }

    CHECK_THROWS_AS(dihedral_blocks(5), InvalidArgument);
    CHECK_THROWS_AS(b.quotient(cyc(4, "(1 2)")), InvalidArgument);
}

TEST_CASE("even dihedral detection compares element sets")
{
    CHECK(is_even_dihedral(make_named(GroupKind::Dihedral, 4)));
    CHECK(is_even_dihedral(make_named(GroupKind::Dihedral, 6)));
    CHECK(is_even_dihedral(parse_group_spec("gens4:(1 2)(3 4);(1 2 3 4)")));
    CHECK(is_even_dihedral(make_named(GroupKind::Symmetric, 2)));
    CHECK(is_even_dihedral(parse_group_spec("gens2:(1 2)")));
    CHECK_FALSE(is_even_dihedral(make_named(GroupKind::Dihedral, 3)));
    CHECK_FALSE(is_even_dihedral(make_named(GroupKind::Cyclic, 4)));
    CHECK_FALSE(is_even_dihedral(parse_group_spec("gens4:(1 2 3 4)")));
}

TEST_CASE("group spec grammar")
{
    CHECK(parse_group_spec("S4").order() == 24);
    CHECK(parse_group_spec("A5").order() == 60);
    CHECK(parse_group_spec("D6").order() == 12);
    CHECK(parse_group_spec("Z5").order() == 5);
    CHECK(parse_group_spec("gens4:(1 2)(3 4);(1 2 3 4)").order() == 8);
    CHECK(parse_group_spec("gens3:").order() == 1);
    CHECK(parse_group_spec("gens3:(1 2 3)").kind() == GroupKind::Custom);
    for (auto bad : {"", "S", "X3", "S0", "D2", "Z1", "gens3(1 2)", "gens3:(1 4)", "gens3:(1 2", "S3x"})
        CHECK_THROWS_AS(parse_group_spec(bad), ParseError);
}
