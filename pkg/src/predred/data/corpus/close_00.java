public void f() throws IOException {
    if (stream != null) {
        stream.close();
        stream = null;
    }
}
