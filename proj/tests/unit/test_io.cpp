#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "pnorm/io.hpp"
#include "support.hpp"

using namespace pnorm;
using namespace pnorm::io;
namespace t = pnorm::testing;

namespace {
const complex I{0, 1};

void write_text(const std::filesystem::path& p, const std::string& s) {
    std::ofstream f(p);
    f << s;
}
}  // namespace

TEST(ParseComplex, Forms) {
    EXPECT_EQ(parse_complex("3"), complex(3, 0));
    EXPECT_EQ(parse_complex("-2.5"), complex(-2.5, 0));
    EXPECT_EQ(parse_complex("1+2i"), complex(1, 2));
    EXPECT_EQ(parse_complex("1-2i"), complex(1, -2));
    EXPECT_EQ(parse_complex("4i"), complex(0, 4));
    EXPECT_EQ(parse_complex("i"), complex(0, 1));
    EXPECT_EQ(parse_complex("-i"), complex(0, -1));
    EXPECT_EQ(parse_complex(" 1e-3 + 2E+2i "), complex(1e-3, 200));
    EXPECT_EQ(parse_complex("-1e5-1e-5j"), complex(-1e5, -1e-5));
}

TEST(ParseComplex, Rejects) {
    EXPECT_THROW(parse_complex(""), parse_error);
    EXPECT_THROW(parse_complex("abc"), parse_error);
    EXPECT_THROW(parse_complex("1+2"), parse_error);
    EXPECT_THROW(parse_complex("nan"), parse_error);
}

TEST(FormatComplex, RoundTrip) {
    std::mt19937_64 rng(61);
    std::normal_distribution<double> g;
    for (int k = 0; k < 200; ++k) {
        const complex z{g(rng) * std::pow(10.0, k % 20 - 10), k % 3 == 0 ? 0.0 : g(rng)};
        EXPECT_EQ(parse_complex(format_complex(z)), z);
    }
}

TEST(Json, RoundTripBitExact) {
    std::mt19937_64 rng(62);
    for (int k = 0; k < 20; ++k) {
        const CMatrix a = t::random_complex(1 + k % 6, rng);
        EXPECT_EQ(from_json(to_json(a)), a);
    }
}

TEST(Json, AcceptsPlainNumbers) {
    EXPECT_EQ(from_json(R"({"rows":1,"cols":2,"entries":[3,[1,-1]]})"), (CMatrix{{3, complex(1, -1)}}));
}

TEST(Json, Malformed) {
    EXPECT_THROW(from_json("{"), parse_error);
    EXPECT_THROW(from_json(R"({"rows":2,"cols":2,"entries":[1,2,3]})"), parse_error);
    EXPECT_THROW(from_json(R"({"rows":1,"cols":1,"entries":[[1,2,3]]})"), parse_error);
    EXPECT_THROW(from_json(R"({"rows":0,"cols":0,"entries":[]})"), parse_error);
    EXPECT_THROW(from_json(R"({"cols":1,"entries":[1]})"), parse_error);
}

TEST(Csv, RoundTripAndComments) {
    const CMatrix a{{1, complex(0, -2)}, {I, 4.5}};
    EXPECT_EQ(from_csv(to_csv(a)), a);
    EXPECT_EQ(from_csv("# header\n1, 2\n\n3,4\n"), (CMatrix{{1, 2}, {3, 4}}));
    EXPECT_THROW(from_csv("1,2\n3\n"), parse_error);
    EXPECT_THROW(from_csv("# nothing\n"), parse_error);
}

TEST(Files, ReadWrite) {
    const auto dir = t::temp_dir();
    const CMatrix a = t::tensor_second();
    write_matrix(dir / "io_a.json", a);
    EXPECT_EQ(read_matrix(dir / "io_a.json"), a);
    write_matrix(dir / "io_a.csv", a);
    EXPECT_EQ(read_matrix(dir / "io_a.csv"), a);
    write_matrix(dir / "io_a.dat", a, Format::json);
    EXPECT_EQ(read_matrix(dir / "io_a.dat"), a);
    write_text(dir / "io_b.txt", "1,2\n3,4\n");
    EXPECT_EQ(read_matrix(dir / "io_b.txt"), (CMatrix{{1, 2}, {3, 4}}));
}

TEST(Files, Errors) {
    const auto dir = t::temp_dir();
    EXPECT_THROW(read_matrix(dir / "does_not_exist.json"), io_error);
    EXPECT_THROW(write_matrix(dir / "no_such_dir" / "x.json", CMatrix::identity(2)), io_error);
    write_text(dir / "io_bad.json", "{not json");
    EXPECT_THROW(read_matrix(dir / "io_bad.json"), parse_error);
}
