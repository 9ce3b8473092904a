public boolean f(Object obj) {
    return obj instanceof Version && ((Version) obj).id == id;
}
