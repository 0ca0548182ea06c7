#include <gtest/gtest.h>

#include "emcad/json_fields.hpp"

using namespace emcad;

TEST(ObjectReader, ReadsTypedFieldsAndRejectsUnknown) {
    const Json j = {{"a", 1.5}, {"n", 3}, {"s", "x"}, {"b", true}, {"extra", 0}};
    ObjectReader r(j, "spec");
    EXPECT_EQ(r.number("a"), 1.5);
    EXPECT_EQ(r.integer("n"), 3);
    EXPECT_EQ(r.string("s"), "x");
    EXPECT_TRUE(r.boolean("b"));
    try {
        r.finish();
        FAIL() << "unknown field accepted";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field_path(), "spec.extra");
    }
}

TEST(ObjectReader, MissingAndMistypedFieldsNamePath) {
    const Json j = {{"kva", "ten"}, {"poles", 2.5}};
    ObjectReader r(j, "");
    try {
        r.number("kva");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field_path(), "kva");
    }
    EXPECT_THROW(r.integer("poles"), ValidationError);
    try {
        r.number("missing");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field_path(), "missing");
        EXPECT_NE(std::string(e.what()).find("required"), std::string::npos);
    }
}

TEST(ObjectReader, IntegralFloatsAcceptedAsIntegers) {
    const Json j = {{"p", 4.0}};
    ObjectReader r(j, "");
    EXPECT_EQ(r.integer("p"), 4);
}

TEST(ObjectReader, BoundsHelpers) {
    const Json j = {{"neg", -1.0}, {"zero", 0.0}, {"one", 1.0}};
    ObjectReader r(j, "");
    EXPECT_THROW(r.positive("neg"), ValidationError);
    EXPECT_THROW(r.positive("zero"), ValidationError);
    EXPECT_EQ(r.non_negative("zero"), 0.0);
    EXPECT_THROW(r.fraction("one"), ValidationError);
}

TEST(ObjectReader, EnumerationListsAllowedValues) {
    enum class E { a, b };
    const Json j = {{"k", "c"}};
    ObjectReader r(j, "x");
    try {
        r.enumeration<E>("k", {{"a", E::a}, {"b", E::b}});
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field_path(), "x.k");
        EXPECT_NE(std::string(e.what()).find("{a, b}"), std::string::npos);
    }
}

TEST(MergePatch, RecursiveByFieldName) {
    Json base = {{"a", 1}, {"nested", {{"x", 1}, {"y", 2}}}};
    merge_patch(base, Json{{"nested", {{"y", 5}}}}, "", false);
    EXPECT_EQ(base["nested"]["x"], 1);
    EXPECT_EQ(base["nested"]["y"], 5);
    EXPECT_EQ(base["a"], 1);
}

TEST(MergePatch, UnknownFieldRejectedWithPath) {
    Json base = {{"nested", {{"x", 1}}}};
    try {
        merge_patch(base, Json{{"nested", {{"z", 1}}}}, "spec", false);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field_path(), "spec.nested.z");
    }
    merge_patch(base, Json{{"w", 2}}, "", true);
    EXPECT_EQ(base["w"], 2);
}

TEST(ParseJsonText, SyntaxErrorsCarryLineAndColumn) {
    try {
        parse_json_text("{\n  \"a\": 1,\n  \"b\": ]\n}");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}
