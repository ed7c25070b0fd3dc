#include "doctest.h"

#include "ambc/forward.hpp"
#include "ambc/render.hpp"
#include "ambc/tabloid.hpp"

using namespace ambc;

TEST_CASE("triple text format round trip, byte for byte") {
    OmegaTriple t = phi(parse_window("[1,2,17,5,14,18,20]", 7));
    std::string text = to_text(t);
    CHECK(text == "1,2,5|4,6,7|3 ; 3,6,7|2,4,5|1 ; 3,3,1");
    CHECK(triple_from_text(text, 7) == t);
    CHECK(to_text(triple_from_text(text, 7)) == text);

    std::string json = triple_to_json(t);
    CHECK(triple_from_json(json, 7) == t);
    CHECK(triple_to_json(triple_from_json(json, 7)) == json);
}

TEST_CASE("triple parsing errors") {
    CHECK_THROWS_AS(triple_from_text("1,2 ; 1,2", 2), ParseError);
    CHECK_THROWS_AS(triple_from_text("1,2 ; 1,2 ; x", 2), ParseError);
    CHECK_THROWS_AS(triple_from_text("1,2|1 ; 1,2|2 ; 0,0", 2), InvalidTriple);
    CHECK_THROWS_AS(triple_from_json("[]", 2), ParseError);
}

TEST_CASE("standardizability") {
    Tabloid ok;
    ok.rows = {{1, 2, 5}, {3, 4}};
    CHECK(standardizable(ok, 5));
    Tabloid bad;
    bad.rows = {{2, 3, 5}, {1, 4}};  // column 1 would read 2 above 1
    CHECK_FALSE(standardizable(bad, 5));
    // single row is always standardizable after sorting
    Tabloid row;
    row.rows = {{4, 1, 3, 2}};
    CHECK(standardizable(row, 4));
}

TEST_CASE("render shows balls, channel brackets, stream cells and rules") {
    Window w = parse_window("[4,1,6,11,2,3]", 6);
    RenderOptions opts;
    opts.row_lo = 1;
    opts.row_hi = 12;
    std::string pic = render(w, opts);
    CHECK(pic.find('[') != std::string::npos);   // channel ball
    CHECK(pic.find('(') != std::string::npos);   // ordinary ball
    CHECK(pic.find('*') != std::string::npos);   // back corner-post
    CHECK(pic.find('+') != std::string::npos);   // period rule
    CHECK(pic.find("(4)") != std::string::npos); // numbering values appear

    RenderOptions back;
    back.numbering = RenderNumbering::Backward;
    CHECK_THROWS_AS(render(w, back), std::invalid_argument);
    back.stream = Stream(6, {1, 3}, {2, 4}, 0);
    Window partial = parse_window("[_,1,_,9,_,_]", 6);
    CHECK_NOTHROW(render(partial, back));
}
