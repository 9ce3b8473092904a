public void f() throws IOException {
    closed = true;
    channel.close();
}
